#include "srl/stratify.h"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "srl/rng.h"

namespace srl {

std::set<std::string> StratificationLabels(const Instance& instance,
                                           const StratifyOptions& options) {
  std::set<std::string> labels;
  for (const ArgumentSpan& span : instance.spans) {
    if (span.label == kVerbLabel) continue;
    if (!options.include_continuation_and_reference &&
        (IsContinuationLabel(span.label) || IsReferenceLabel(span.label)))
      continue;
    labels.insert(span.label);
  }
  return labels;
}

std::vector<int> FoldAssignment::FoldSizes() const {
  std::vector<int> sizes(k, 0);
  for (int f : fold) ++sizes[f];
  return sizes;
}

std::vector<int> IterativeStratify(const std::vector<std::set<std::string>>& labels,
                                   const std::vector<int>& target_sizes, uint64_t seed) {
  const int n = static_cast<int>(labels.size());
  const int k = static_cast<int>(target_sizes.size());
  long total = 0;
  for (int size : target_sizes) total += size;
  if (total != n) throw std::invalid_argument("fold target sizes must sum to the instance count");

  // Dense label ids in name order.
  std::map<std::string, int> label_ids;
  for (const auto& set : labels)
    for (const std::string& label : set) label_ids.emplace(label, 0);
  int next_id = 0;
  for (auto& [name, id] : label_ids) id = next_id++;
  const int num_labels = next_id;

  std::vector<std::vector<int>> instance_labels(n);
  std::vector<std::vector<int>> members(num_labels);
  for (int i = 0; i < n; ++i) {
    for (const std::string& label : labels[i]) {
      const int id = label_ids[label];
      instance_labels[i].push_back(id);
      members[id].push_back(i);
    }
  }

  std::vector<double> capacity(k);
  std::vector<int> size(k, 0);
  std::vector<std::vector<double>> demand(num_labels, std::vector<double>(k));
  for (int j = 0; j < k; ++j) {
    capacity[j] = target_sizes[j];
    const double ratio = n > 0 ? static_cast<double>(target_sizes[j]) / n : 0.0;
    for (int l = 0; l < num_labels; ++l) demand[l][j] = members[l].size() * ratio;
  }
  std::vector<int> remaining(num_labels);
  for (int l = 0; l < num_labels; ++l) remaining[l] = static_cast<int>(members[l].size());

  SplitMix64 rng(seed);
  std::vector<int> assignment(n, -1);
  std::vector<int> tied;

  auto assign = [&](int i, int fold) {
    assignment[i] = fold;
    ++size[fold];
    capacity[fold] -= 1;
    for (int l : instance_labels[i]) {
      demand[l][fold] -= 1;
      --remaining[l];
    }
  };

  while (true) {
    int chosen = -1;
    for (int l = 0; l < num_labels; ++l)
      if (remaining[l] > 0 && (chosen < 0 || remaining[l] < remaining[chosen])) chosen = l;
    if (chosen < 0) break;

    for (int i : members[chosen]) {
      if (assignment[i] >= 0) continue;
      tied.clear();
      for (int j = 0; j < k; ++j) {
        if (size[j] >= target_sizes[j]) continue;
        if (tied.empty()) {
          tied.push_back(j);
          continue;
        }
        const int best = tied.front();
        const double d = demand[chosen][j], db = demand[chosen][best];
        if (d > db || (d == db && capacity[j] > capacity[best])) {
          tied.assign(1, j);
        } else if (d == db && capacity[j] == capacity[best]) {
          tied.push_back(j);
        }
      }
      const int fold = tied.size() == 1 ? tied[0] : tied[rng.Below(tied.size())];
      assign(i, fold);
    }
  }

  int cursor = 0;
  for (int i = 0; i < n; ++i) {
    if (assignment[i] >= 0) continue;
    while (size[cursor] >= target_sizes[cursor]) cursor = (cursor + 1) % k;
    assign(i, cursor);
    cursor = (cursor + 1) % k;
  }
  return assignment;
}

FoldAssignment StratifiedFolds(const Corpus& corpus, int k, uint64_t seed,
                               const StratifyOptions& options) {
  const int n = static_cast<int>(corpus.instances.size());
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (k > n)
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds the " + std::to_string(n) +
                                " instances");
  std::vector<std::set<std::string>> labels;
  labels.reserve(n);
  FoldAssignment folds;
  folds.k = k;
  folds.seed = seed;
  for (const Instance& instance : corpus.instances) {
    labels.push_back(StratificationLabels(instance, options));
    folds.instance_ids.push_back(instance.id());
  }
  std::vector<int> targets(k, n / k);
  for (int j = 0; j < n % k; ++j) ++targets[j];
  folds.fold = IterativeStratify(labels, targets, seed);
  return folds;
}

void CarveValidation(const Corpus& train, int target_size, uint64_t seed, Corpus* rest,
                     Corpus* validation, const StratifyOptions& options) {
  const int n = static_cast<int>(train.instances.size());
  if (target_size < 0 || target_size >= n)
    throw std::invalid_argument("validation size must be in [0, " + std::to_string(n) + ")");
  std::vector<std::set<std::string>> labels;
  for (const Instance& instance : train.instances)
    labels.push_back(StratificationLabels(instance, options));
  const std::vector<int> side = IterativeStratify(labels, {n - target_size, target_size}, seed);
  rest->instances.clear();
  validation->instances.clear();
  for (int i = 0; i < n; ++i)
    (side[i] == 1 ? validation : rest)->instances.push_back(train.instances[i]);
}

Corpus SelectFold(const Corpus& corpus, const FoldAssignment& folds, int fold, bool complement) {
  if (folds.fold.size() != corpus.instances.size())
    throw std::invalid_argument("fold assignment does not match the corpus");
  Corpus out;
  for (size_t i = 0; i < corpus.instances.size(); ++i)
    if ((folds.fold[i] == fold) != complement) out.instances.push_back(corpus.instances[i]);
  return out;
}

void WriteManifest(std::ostream& out, const FoldAssignment& folds) {
  out << "k\t" << folds.k << '\n' << "seed\t" << folds.seed << '\n';
  for (size_t i = 0; i < folds.fold.size(); ++i)
    out << folds.instance_ids[i] << '\t' << folds.fold[i] << '\n';
}

FoldAssignment ReadManifest(std::istream& in) {
  FoldAssignment folds;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("manifest: expected a tab", line_number);
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    try {
      if (line_number == 1 && key == "k") {
        folds.k = std::stoi(value);
      } else if (line_number == 2 && key == "seed") {
        folds.seed = std::stoull(value);
      } else {
        folds.instance_ids.push_back(key);
        folds.fold.push_back(std::stoi(value));
      }
    } catch (const std::logic_error&) {
      throw ParseError("manifest: bad number '" + value + "'", line_number);
    }
  }
  return folds;
}

}  // namespace srl
