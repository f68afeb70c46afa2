#ifndef SRL_EVAL_H_
#define SRL_EVAL_H_

#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "srl/corpus.h"

namespace srl {

// The spans of one instance, keyed by instance id.
struct LabeledInstance {
  std::string id;
  std::vector<ArgumentSpan> spans;
};

std::vector<LabeledInstance> ToLabeledInstances(const Corpus& corpus);

class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Match counts plus the derived fractions. Fractions are 0 when their
// denominator is 0.
struct Metrics {
  long correct = 0;
  long excess = 0;
  long missed = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;

  static Metrics FromCounts(long correct, long excess, long missed);
  Metrics& operator+=(const Metrics& other);  // adds counts, recomputes fractions

  bool operator==(const Metrics&) const = default;
};

struct EvalReport {
  long instances = 0;
  Metrics overall;                         // V excluded
  std::map<std::string, Metrics> per_label;  // includes V

  bool operator==(const EvalReport&) const = default;
};

// Exact-match span scoring with srl-eval semantics: a predicted span is
// correct iff an unmatched gold span of the same instance has the same
// start, end and label (multiset matching). V spans are left out of the
// overall counts but kept per label; C-x and R-x are ordinary labels.
// Throws AlignmentError when the id sets of gold and pred differ.
//
// Score runs over instances in parallel and reduces in input order;
// ScoreSerial is the plain loop it is tested against.
EvalReport Score(std::span<const LabeledInstance> gold, std::span<const LabeledInstance> pred);
EvalReport ScoreSerial(std::span<const LabeledInstance> gold,
                       std::span<const LabeledInstance> pred);

// Boundary-only matching; V spans are dropped from both sides. per_label is
// empty.
EvalReport ScoreUnlabeled(std::span<const LabeledInstance> gold,
                          std::span<const LabeledInstance> pred);

// Splits 1 - F1 at the unlabeled F1 waypoint:
//   total = 1 - labeled F1
//   arg_id = 1 - unlabeled F1     (boundary errors)
//   arg_class = unlabeled F1 - labeled F1   (labels of found spans)
struct ErrorDecomposition {
  double total_error = 0;
  double arg_id_error = 0;
  double arg_class_error = 0;
};

ErrorDecomposition Decompose(const EvalReport& labeled, const EvalReport& unlabeled);
ErrorDecomposition Decompose(std::span<const LabeledInstance> gold,
                             std::span<const LabeledInstance> pred);

struct DeltaRecord {
  double delta_precision = 0;
  double delta_recall = 0;
  double delta_f1 = 0;
  // Over the union of labels; a label missing on one side counts as F1 0.
  std::map<std::string, double> per_label_delta_f1;
};

// a minus b.
DeltaRecord Compare(const EvalReport& a, const EvalReport& b);

// 100 * numerator / denominator with two decimals, rounded half away from
// zero using integer arithmetic. "0.00" when the denominator is 0.
std::string Percent(long numerator, long denominator);
// Same rounding for values that are not integer ratios, such as means.
std::string Percent(double fraction);

// Precision, recall and F1 as percentages from the exact counts.
std::string PrecisionPercent(const Metrics& m);
std::string RecallPercent(const Metrics& m);
std::string F1Percent(const Metrics& m);

// srl-eval style table.
void WriteReportTable(std::ostream& out, const EvalReport& labeled,
                      const EvalReport* unlabeled, const ErrorDecomposition* decomposition);
// key=value lines: overall.*, label.<L>.*, unlabeled.*, decomposition.*.
void WriteReportKeyValue(std::ostream& out, const EvalReport& labeled,
                         const EvalReport* unlabeled, const ErrorDecomposition* decomposition);

}  // namespace srl

#endif  // SRL_EVAL_H_
