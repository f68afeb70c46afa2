#include "srl/eval.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <unordered_map>

namespace srl {
namespace {

struct Aligned {
  const LabeledInstance* gold;
  const LabeledInstance* pred;
};

std::vector<Aligned> Align(std::span<const LabeledInstance> gold,
                           std::span<const LabeledInstance> pred) {
  std::unordered_map<std::string, const LabeledInstance*> by_id;
  for (const LabeledInstance& p : pred) {
    if (!by_id.emplace(p.id, &p).second)
      throw AlignmentError("duplicate instance id in predictions: " + p.id);
  }
  std::vector<Aligned> aligned;
  std::set<std::string> seen;
  std::vector<std::string> missing;
  for (const LabeledInstance& g : gold) {
    if (!seen.insert(g.id).second) throw AlignmentError("duplicate instance id in gold: " + g.id);
    auto it = by_id.find(g.id);
    if (it == by_id.end()) {
      missing.push_back(g.id);
      continue;
    }
    aligned.push_back({&g, it->second});
  }
  std::vector<std::string> extra;
  for (const LabeledInstance& p : pred)
    if (!seen.contains(p.id)) extra.push_back(p.id);
  if (!missing.empty() || !extra.empty()) {
    std::string message = "instance ids do not align;";
    auto list = [&](const char* what, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      message += std::string(" ") + what + ":";
      for (size_t i = 0; i < ids.size() && i < 20; ++i) message += " " + ids[i];
      if (ids.size() > 20) message += " ... (" + std::to_string(ids.size()) + " total)";
    };
    list("missing from predictions", missing);
    list("missing from gold", extra);
    throw AlignmentError(message);
  }
  return aligned;
}

using LabelCounts = std::map<std::string, Metrics>;

// Multiset match of one instance. Both inputs sorted by (start, end, label).
LabelCounts CountInstance(std::vector<ArgumentSpan> gold, std::vector<ArgumentSpan> pred) {
  std::sort(gold.begin(), gold.end());
  std::sort(pred.begin(), pred.end());
  LabelCounts counts;
  size_t g = 0, p = 0;
  while (g < gold.size() || p < pred.size()) {
    if (p == pred.size() || (g < gold.size() && gold[g] < pred[p])) {
      ++counts[gold[g++].label].missed;
    } else if (g == gold.size() || pred[p] < gold[g]) {
      ++counts[pred[p++].label].excess;
    } else {
      ++counts[gold[g].label].correct;
      ++g;
      ++p;
    }
  }
  return counts;
}

EvalReport Reduce(const std::vector<LabelCounts>& partial) {
  EvalReport report;
  report.instances = static_cast<long>(partial.size());
  long correct = 0, excess = 0, missed = 0;
  std::map<std::string, std::array<long, 3>> raw;
  for (const LabelCounts& counts : partial) {
    for (const auto& [label, m] : counts) {
      auto& r = raw[label];
      r[0] += m.correct;
      r[1] += m.excess;
      r[2] += m.missed;
      if (label == kVerbLabel) continue;
      correct += m.correct;
      excess += m.excess;
      missed += m.missed;
    }
  }
  report.overall = Metrics::FromCounts(correct, excess, missed);
  for (const auto& [label, r] : raw) report.per_label[label] = Metrics::FromCounts(r[0], r[1], r[2]);
  return report;
}

std::vector<ArgumentSpan> Unlabel(const std::vector<ArgumentSpan>& spans) {
  std::vector<ArgumentSpan> out;
  for (const ArgumentSpan& span : spans)
    if (span.label != kVerbLabel) out.push_back({span.start, span.end, "*"});
  return out;
}

double RoundHalfAwayHundredths(double percent) {
  return std::round(percent * 100.0) / 100.0;
}

}  // namespace

std::vector<LabeledInstance> ToLabeledInstances(const Corpus& corpus) {
  std::vector<LabeledInstance> out;
  out.reserve(corpus.instances.size());
  for (const Instance& instance : corpus.instances) out.push_back({instance.id(), instance.spans});
  return out;
}

Metrics Metrics::FromCounts(long correct, long excess, long missed) {
  Metrics m;
  m.correct = correct;
  m.excess = excess;
  m.missed = missed;
  m.precision = correct + excess > 0 ? static_cast<double>(correct) / (correct + excess) : 0.0;
  m.recall = correct + missed > 0 ? static_cast<double>(correct) / (correct + missed) : 0.0;
  // Harmonic mean of P and R, from the counts directly.
  const long f1_denominator = 2 * correct + excess + missed;
  m.f1 = correct > 0 ? static_cast<double>(2 * correct) / f1_denominator : 0.0;
  return m;
}

Metrics& Metrics::operator+=(const Metrics& other) {
  *this = FromCounts(correct + other.correct, excess + other.excess, missed + other.missed);
  return *this;
}

EvalReport Score(std::span<const LabeledInstance> gold, std::span<const LabeledInstance> pred) {
  const std::vector<Aligned> aligned = Align(gold, pred);
  const long n = static_cast<long>(aligned.size());
  std::vector<LabelCounts> partial(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) partial[i] = CountInstance(aligned[i].gold->spans, aligned[i].pred->spans);
  return Reduce(partial);
}

EvalReport ScoreSerial(std::span<const LabeledInstance> gold,
                       std::span<const LabeledInstance> pred) {
  std::vector<LabelCounts> partial;
  for (const Aligned& a : Align(gold, pred))
    partial.push_back(CountInstance(a.gold->spans, a.pred->spans));
  return Reduce(partial);
}

EvalReport ScoreUnlabeled(std::span<const LabeledInstance> gold,
                          std::span<const LabeledInstance> pred) {
  std::vector<LabelCounts> partial;
  for (const Aligned& a : Align(gold, pred))
    partial.push_back(CountInstance(Unlabel(a.gold->spans), Unlabel(a.pred->spans)));
  EvalReport report = Reduce(partial);
  report.per_label.clear();
  return report;
}

ErrorDecomposition Decompose(const EvalReport& labeled, const EvalReport& unlabeled) {
  ErrorDecomposition d;
  d.total_error = 1.0 - labeled.overall.f1;
  d.arg_id_error = 1.0 - unlabeled.overall.f1;
  d.arg_class_error = unlabeled.overall.f1 - labeled.overall.f1;
  return d;
}

ErrorDecomposition Decompose(std::span<const LabeledInstance> gold,
                             std::span<const LabeledInstance> pred) {
  return Decompose(Score(gold, pred), ScoreUnlabeled(gold, pred));
}

DeltaRecord Compare(const EvalReport& a, const EvalReport& b) {
  DeltaRecord delta;
  delta.delta_precision = a.overall.precision - b.overall.precision;
  delta.delta_recall = a.overall.recall - b.overall.recall;
  delta.delta_f1 = a.overall.f1 - b.overall.f1;
  std::set<std::string> labels;
  for (const auto& [label, m] : a.per_label) labels.insert(label);
  for (const auto& [label, m] : b.per_label) labels.insert(label);
  for (const std::string& label : labels) {
    auto ia = a.per_label.find(label);
    auto ib = b.per_label.find(label);
    const double fa = ia == a.per_label.end() ? 0.0 : ia->second.f1;
    const double fb = ib == b.per_label.end() ? 0.0 : ib->second.f1;
    delta.per_label_delta_f1[label] = fa - fb;
  }
  return delta;
}

std::string Percent(long numerator, long denominator) {
  if (denominator <= 0) return "0.00";
  const bool negative = numerator < 0;
  const long long n = negative ? -static_cast<long long>(numerator) : numerator;
  // hundredths of a percent, rounded half up on the magnitude
  const long long hundredths = (20000LL * n + denominator) / (2LL * denominator);
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%s%lld.%02lld", negative && hundredths ? "-" : "",
                hundredths / 100, hundredths % 100);
  return buffer;
}

std::string Percent(double fraction) {
  char buffer[48];
  double value = RoundHalfAwayHundredths(fraction * 100.0);
  if (value == 0) value = 0;  // no "-0.00"
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

std::string PrecisionPercent(const Metrics& m) { return Percent(m.correct, m.correct + m.excess); }
std::string RecallPercent(const Metrics& m) { return Percent(m.correct, m.correct + m.missed); }
// F1 = 2c / (2c + excess + missed) exactly.
std::string F1Percent(const Metrics& m) {
  return Percent(2 * m.correct, 2 * m.correct + m.excess + m.missed);
}

void WriteReportTable(std::ostream& out, const EvalReport& labeled,
                      const EvalReport* unlabeled, const ErrorDecomposition* decomposition) {
  char line[160];
  auto row = [&](const std::string& name, const Metrics& m) {
    std::snprintf(line, sizeof(line), "%13s %7ld %7ld %7ld %8s %8s %8s\n", name.c_str(),
                  m.correct, m.excess, m.missed, PrecisionPercent(m).c_str(),
                  RecallPercent(m).c_str(), F1Percent(m).c_str());
    out << line;
  };
  out << "Number of instances: " << labeled.instances << "\n\n";
  std::snprintf(line, sizeof(line), "%13s %7s %7s %7s %8s %8s %8s\n", "", "corr.", "excess",
                "missed", "prec.", "rec.", "F1");
  out << line << std::string(64, '-') << '\n';
  row("Overall", labeled.overall);
  out << std::string(64, '-') << '\n';
  for (const auto& [label, m] : labeled.per_label)
    if (label != kVerbLabel) row(label, m);
  out << std::string(64, '-') << '\n';
  if (auto it = labeled.per_label.find(std::string(kVerbLabel)); it != labeled.per_label.end()) {
    row("V", it->second);
    out << std::string(64, '-') << '\n';
  }
  if (unlabeled != nullptr) {
    out << '\n';
    row("Unlabeled", unlabeled->overall);
  }
  if (decomposition != nullptr) {
    out << "\nError decomposition (percent of F1):\n";
    out << "  total      " << Percent(decomposition->total_error) << '\n';
    out << "  arg id     " << Percent(decomposition->arg_id_error) << '\n';
    out << "  arg class  " << Percent(decomposition->arg_class_error) << '\n';
  }
}

void WriteReportKeyValue(std::ostream& out, const EvalReport& labeled,
                         const EvalReport* unlabeled, const ErrorDecomposition* decomposition) {
  auto block = [&](const std::string& prefix, const Metrics& m) {
    out << prefix << ".correct=" << m.correct << '\n'
        << prefix << ".excess=" << m.excess << '\n'
        << prefix << ".missed=" << m.missed << '\n'
        << prefix << ".precision=" << PrecisionPercent(m) << '\n'
        << prefix << ".recall=" << RecallPercent(m) << '\n'
        << prefix << ".f1=" << F1Percent(m) << '\n';
  };
  out << "instances=" << labeled.instances << '\n';
  block("overall", labeled.overall);
  for (const auto& [label, m] : labeled.per_label) block("label." + label, m);
  if (unlabeled != nullptr) block("unlabeled", unlabeled->overall);
  if (decomposition != nullptr) {
    out << "decomposition.total_error=" << Percent(decomposition->total_error) << '\n'
        << "decomposition.arg_id_error=" << Percent(decomposition->arg_id_error) << '\n'
        << "decomposition.arg_class_error=" << Percent(decomposition->arg_class_error) << '\n';
  }
}

}  // namespace srl
