#ifndef SRL_EXPERIMENT_H_
#define SRL_EXPERIMENT_H_

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "srl/eval.h"

namespace srl {

enum class Scenario { kPtOnly, kPlusEn, kZeroShot };
enum class EvalSet { kTest, kOutOfDomain };

std::string_view ToString(Scenario scenario);  // "pt-only", "+En", "zero-shot"
std::string_view ToString(EvalSet set);        // "test", "ood"
// Throw std::invalid_argument on unknown names. "buscape" is accepted for ood.
Scenario ParseScenario(std::string_view name);
EvalSet ParseEvalSet(std::string_view name);

// One evaluation: the model trained for `fold`, scored on that fold's test
// split or on the out-of-domain set.
struct RunKey {
  std::string model;
  Scenario scenario = Scenario::kPtOnly;
  int fold = 0;
  EvalSet set = EvalSet::kTest;

  auto operator<=>(const RunKey&) const = default;
  bool operator==(const RunKey&) const = default;
};

// The model name as it appears in tables: "XLM-R", "XLM-R+En",
// "mBERT(zero-shot)".
std::string CandidateName(const std::string& model, Scenario scenario);

struct RunRecord {
  RunKey key;
  std::string source;  // emission file
  bool gap = false;    // skipped; `reason` says why
  std::string reason;
  EvalReport report;
  EvalReport unlabeled;
  ErrorDecomposition decomposition;
};

// Declarative experiment description. Line grammar ('#' starts a comment,
// fields separated by whitespace, relative paths resolve against the
// config file's directory):
//
//   name      <experiment name>
//   baseline  <model>                        reference row for delta F1
//   fold      <index> <gold conll file>
//   ood       <gold conll file>
//   run       <model> <scenario> <fold> <test|ood> <emission file>
//
// Scenarios: pt-only, +En, zero-shot.
struct ExperimentConfig {
  struct Run {
    RunKey key;
    std::filesystem::path emissions;
  };

  std::string name;
  std::optional<std::string> baseline;
  std::map<int, std::filesystem::path> fold_gold;
  std::optional<std::filesystem::path> ood_gold;
  std::vector<Run> runs;

  // Throws ParseError.
  static ExperimentConfig Parse(std::istream& in, const std::filesystem::path& base_dir);
  static ExperimentConfig Load(const std::filesystem::path& path);
};

// Decodes, scores and decomposes every run. Runs execute in parallel;
// records come back ordered by key. A missing emission file yields a gap
// record instead of an error; malformed files throw.
std::vector<RunRecord> RunExperiment(const ExperimentConfig& config);

// Scores one emission file against gold (decode + score + decompose).
RunRecord EvaluateRun(const RunKey& key, const Corpus& gold, const std::filesystem::path& emissions);

// Key-value record files, one per run.
void WriteRunRecord(std::ostream& out, const RunRecord& record);
RunRecord ReadRunRecord(std::istream& in);
std::string RunRecordFileName(const RunKey& key);
void SaveRunRecords(const std::filesystem::path& dir, std::span<const RunRecord> records);
// Every *.run file in dir, ordered by key.
std::vector<RunRecord> LoadRunRecords(const std::filesystem::path& dir);

struct AggregateOptions {
  // Compare every row with this model's pt-only row. When unset, rows of
  // the +En and zero-shot scenarios are compared with the same model's
  // pt-only row.
  std::optional<std::string> baseline_model;
  // Fractions from summed counts instead of means of per-fold fractions.
  bool pooled = false;
};

struct AggregateRow {
  std::string candidate;
  std::string model;
  Scenario scenario = Scenario::kPtOnly;
  int test_runs = 0;
  int ood_runs = 0;
  // Means over folds (or pooled); counts are always summed.
  EvalReport test;
  EvalReport ood;
  ErrorDecomposition test_errors;  // mean per-fold decomposition
  ErrorDecomposition ood_errors;
  std::optional<DeltaRecord> test_delta;
  std::optional<DeltaRecord> ood_delta;
  // Fold whose model scored the highest F1 on its own test split.
  std::optional<int> best_fold;
  Metrics best;
  // Run records skipped for a missing emission file, by file name.
  std::vector<std::string> gaps;
};

struct AggregateTable {
  std::vector<AggregateRow> rows;  // ordered by (model, scenario)
  bool pooled = false;
};

AggregateTable Aggregate(std::span<const RunRecord> records, const AggregateOptions& options = {});
void WriteAggregateTable(std::ostream& out, const AggregateTable& table);
void WriteAggregateTsv(std::ostream& out, const AggregateTable& table);

enum class DataKind { kClean, kUnclean };
DataKind ParseDataKind(std::string_view name);

class SelectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Highest score wins; equal scores go to the lexicographically smaller name.
std::string BestCandidate(const std::map<std::string, double>& scores);

// Model choice by use case: clean text ranks candidates by mean F1 over
// the test folds, unclean text by mean F1 on the out-of-domain set. With
// `roles` non-empty, F1 is computed from the counts of those labels only.
// Throws SelectionError if a role appears in no report or no candidate has
// records of the needed kind.
std::string SelectModel(std::span<const RunRecord> records, DataKind kind,
                        const std::vector<std::string>& roles = {});

// Mean F1 per candidate that SelectModel ranks.
std::map<std::string, double> SelectionScores(std::span<const RunRecord> records, DataKind kind,
                                              const std::vector<std::string>& roles = {});

}  // namespace srl

#endif  // SRL_EXPERIMENT_H_
