#include "srl/viterbi.h"

#include <cmath>
#include <exception>
#include <limits>
#include <string>

namespace srl {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void CheckInput(const EmissionMatrix& emissions, const LabelSet& labels) {
  if (emissions.num_tags() != labels.size())
    throw std::invalid_argument(emissions.instance_id() + ": matrix has " +
                                std::to_string(emissions.num_tags()) + " columns, label set has " +
                                std::to_string(labels.size()) + " tags");
  for (int t = 0; t < emissions.num_tokens(); ++t)
    for (int j = 0; j < emissions.num_tags(); ++j)
      if (!std::isfinite(emissions.at(t, j)))
        throw DecodeError(emissions.instance_id() + ": non-finite score at token " +
                          std::to_string(t) + ", tag " + std::to_string(j));
}

// Lowest index wins ties.
int ArgMax(std::span<const double> values) {
  int best = 0;
  for (int j = 1; j < static_cast<int>(values.size()); ++j)
    if (values[j] > values[best]) best = j;
  return best;
}

Decoded Backtrack(const std::vector<double>& last, const std::vector<int>& backpointers,
                  int num_tokens, int num_tags) {
  Decoded decoded;
  decoded.tags.resize(num_tokens);
  int tag = ArgMax(last);
  decoded.score = last[tag];
  for (int t = num_tokens - 1; t >= 0; --t) {
    decoded.tags[t] = tag;
    if (t > 0) tag = backpointers[static_cast<size_t>(t) * num_tags + tag];
  }
  return decoded;
}

void InitFirst(const EmissionMatrix& emissions, const LabelSet& labels,
               std::vector<double>* delta) {
  for (int j = 0; j < labels.size(); ++j)
    (*delta)[j] = labels.AllowsFirst(j) ? emissions.at(0, j) : kNegInf;
}

}  // namespace

Decoded ViterbiDecode(const EmissionMatrix& emissions, const LabelSet& labels) {
  CheckInput(emissions, labels);
  const int num_tokens = emissions.num_tokens();
  const int num_tags = labels.size();
  if (num_tokens == 0) return {};

  std::vector<double> delta(num_tags), next(num_tags);
  std::vector<int> backpointers(static_cast<size_t>(num_tokens) * num_tags, -1);
  InitFirst(emissions, labels, &delta);

  for (int t = 1; t < num_tokens; ++t) {
    const int best_any = ArgMax(delta);
    const auto row = emissions.row(t);
    int* back = backpointers.data() + static_cast<size_t>(t) * num_tags;
    for (int j = 0; j < num_tags; ++j) {
      const TagInfo& info = labels.info(j);
      int from = best_any;
      if (info.kind == TagKind::kInside) {
        const int b = labels.begin_tag(info.role);
        const int i = labels.inside_tag(info.role);
        const int low = b < i ? b : i;
        const int high = b < i ? i : b;
        from = delta[high] > delta[low] ? high : low;
      }
      back[j] = from;
      next[j] = delta[from] + row[j];
    }
    delta.swap(next);
  }
  return Backtrack(delta, backpointers, num_tokens, num_tags);
}

Decoded ViterbiDecodeDense(const EmissionMatrix& emissions, const LabelSet& labels) {
  CheckInput(emissions, labels);
  const int num_tokens = emissions.num_tokens();
  const int num_tags = labels.size();
  if (num_tokens == 0) return {};

  // transition[i * L + j] is 0 when j may follow i, -inf otherwise.
  std::vector<double> transition(static_cast<size_t>(num_tags) * num_tags);
  for (int i = 0; i < num_tags; ++i)
    for (int j = 0; j < num_tags; ++j)
      transition[static_cast<size_t>(i) * num_tags + j] = labels.Allows(i, j) ? 0.0 : kNegInf;

  std::vector<double> delta(num_tags), next(num_tags);
  std::vector<int> backpointers(static_cast<size_t>(num_tokens) * num_tags, -1);
  InitFirst(emissions, labels, &delta);

  for (int t = 1; t < num_tokens; ++t) {
    for (int j = 0; j < num_tags; ++j) {
      double best = kNegInf;
      int from = 0;
      for (int i = 0; i < num_tags; ++i) {
        const double candidate = delta[i] + transition[static_cast<size_t>(i) * num_tags + j];
        if (candidate > best) {
          best = candidate;
          from = i;
        }
      }
      backpointers[static_cast<size_t>(t) * num_tags + j] = from;
      next[j] = best + emissions.at(t, j);
    }
    delta.swap(next);
  }
  return Backtrack(delta, backpointers, num_tokens, num_tags);
}

std::vector<Decoded> DecodeBatch(std::span<const EmissionMatrix> batch, const LabelSet& labels) {
  const long n = static_cast<long>(batch.size());
  std::vector<Decoded> out(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = ViterbiDecode(batch[i], labels);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
  return out;
}

std::vector<Decoded> DecodeBatchSerial(std::span<const EmissionMatrix> batch,
                                       const LabelSet& labels) {
  std::vector<Decoded> out;
  out.reserve(batch.size());
  for (const EmissionMatrix& emissions : batch) out.push_back(ViterbiDecode(emissions, labels));
  return out;
}

}  // namespace srl
