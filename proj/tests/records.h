#ifndef SRL_TESTS_RECORDS_H_
#define SRL_TESTS_RECORDS_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "srl/experiment.h"

namespace srl::testing {

// A scored run with the given labeled counts. Unlabeled counts are one
// boundary-correct span better, so the decomposition is nonzero.
inline RunRecord Record(const std::string& model, Scenario scenario, int fold, EvalSet set,
                        long c, long e, long m,
                        std::map<std::string, std::array<long, 3>> labels = {}) {
  RunRecord record;
  record.key = {model, scenario, fold, set};
  record.source = model + ".tsv";
  record.report.instances = 10;
  record.report.overall = Metrics::FromCounts(c, e, m);
  for (const auto& [label, k] : labels)
    record.report.per_label[label] = Metrics::FromCounts(k[0], k[1], k[2]);
  record.unlabeled.instances = 10;
  record.unlabeled.overall =
      Metrics::FromCounts(c + 1, e > 0 ? e - 1 : 0, m > 0 ? m - 1 : 0);
  record.decomposition = Decompose(record.report, record.unlabeled);
  return record;
}

// The six hand-built selection cases: records, data kind, roles, expected pick.
struct SelectionCase {
  std::string name;
  std::vector<RunRecord> records;
  DataKind data;
  std::vector<std::string> roles;
  std::string expected;
};

inline std::vector<SelectionCase> SelectionCases() {
  const auto fold = EvalSet::kTest;
  const auto ood = EvalSet::kOutOfDomain;
  std::vector<SelectionCase> cases;
  cases.push_back({"single model",
                   {Record("solo", Scenario::kPtOnly, 0, fold, 1, 1, 1)},
                   DataKind::kClean, {}, "solo"});
  const std::vector<RunRecord> split = {
      Record("A", Scenario::kPtOnly, 0, fold, 9, 1, 1),
      Record("A", Scenario::kPtOnly, 1, fold, 8, 2, 2),
      Record("B", Scenario::kPtOnly, 0, fold, 7, 3, 3),
      Record("B", Scenario::kPtOnly, 1, fold, 7, 3, 3),
      Record("A", Scenario::kPtOnly, 0, ood, 5, 5, 5),
      Record("B", Scenario::kPtOnly, 0, ood, 6, 4, 4)};
  cases.push_back({"clean data uses fold scores", split, DataKind::kClean, {}, "A"});
  cases.push_back({"unclean data uses out-of-domain scores", split, DataKind::kUnclean, {}, "B"});
  const std::vector<RunRecord> roles = {
      Record("A", Scenario::kPtOnly, 0, fold, 9, 1, 1, {{"A0", {8, 0, 0}}, {"AM-TMP", {1, 1, 1}}}),
      Record("B", Scenario::kPlusEn, 0, fold, 7, 3, 3, {{"A0", {4, 1, 1}}, {"AM-TMP", {3, 0, 0}}})};
  cases.push_back({"role subset uses per-role F1", roles, DataKind::kClean, {"AM-TMP"}, "B+En"});
  cases.push_back({"role subset of several roles", roles, DataKind::kClean, {"A0", "AM-TMP"}, "A"});
  cases.push_back({"tie goes to the smaller name",
                   {Record("zeta", Scenario::kPtOnly, 0, fold, 5, 5, 5),
                    Record("alpha", Scenario::kPtOnly, 0, fold, 5, 5, 5)},
                   DataKind::kClean, {}, "alpha"});
  return cases;
}

}  // namespace srl::testing

#endif  // SRL_TESTS_RECORDS_H_
