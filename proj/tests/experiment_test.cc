#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "srl/conll.h"
#include "srl/emissions.h"
#include "srl/experiment.h"
#include "srl/rng.h"
#include "srl/synthetic.h"
#include "records.h"

namespace srl {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("srl_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

using testing::Record;

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

Corpus SmallCorpus(uint64_t seed) {
  SyntheticOptions options;
  options.sentences = 20;
  options.seed = seed;
  return SyntheticCorpus(options);
}

EmissionFile OracleEmissions(const Corpus& corpus, const LabelSet& labels) {
  EmissionFile file;
  file.labels = labels;
  for (const Instance& instance : corpus.instances)
    file.instances.push_back(OneHotEmissions(
        instance.id(),
        SpansToTags(instance.spans, static_cast<int>(instance.tokens.size()), labels),
        labels.size()));
  return file;
}

EmissionFile Uniform(const Corpus& corpus, const LabelSet& labels) {
  EmissionFile file;
  file.labels = labels;
  for (const Instance& instance : corpus.instances)
    file.instances.push_back(UniformEmissions(
        instance.id(), static_cast<int>(instance.tokens.size()), labels.size()));
  return file;
}

void Save(const fs::path& path, const EmissionFile& file) {
  std::ofstream out(path);
  WriteEmissions(out, file);
}

TEST(ExperimentConfig, ParsesGrammarAndResolvesPaths) {
  std::istringstream in(
      "# comment\n"
      "name   demo\n"
      "baseline brBERT\n"
      "fold 0 folds/f0.conll\n"
      "fold 1 /abs/f1.conll   # trailing comment\n"
      "ood buscape.conll\n"
      "run XLM-R +En 0 test e/x0.tsv\n"
      "run XLM-R zero-shot 1 buscape e/x1.tsv\n");
  const ExperimentConfig config = ExperimentConfig::Parse(in, "/base");
  EXPECT_EQ(config.name, "demo");
  EXPECT_EQ(config.baseline, "brBERT");
  EXPECT_EQ(config.fold_gold.at(0), fs::path("/base/folds/f0.conll"));
  EXPECT_EQ(config.fold_gold.at(1), fs::path("/abs/f1.conll"));
  ASSERT_EQ(config.runs.size(), 2u);
  EXPECT_EQ(config.runs[0].key, (RunKey{"XLM-R", Scenario::kPlusEn, 0, EvalSet::kTest}));
  EXPECT_EQ(config.runs[1].key.set, EvalSet::kOutOfDomain);
  EXPECT_EQ(config.runs[1].emissions, fs::path("/base/e/x1.tsv"));
}

TEST(ExperimentConfig, Errors) {
  const std::vector<std::string> bad = {
      "fold x a.conll\n",
      "fold 0 a\nfold 0 b\n",
      "run m pt-only 0 test\n",
      "fold 0 a\nrun m sideways 0 test e\n",
      "fold 0 a\nrun m pt-only 0 test e\nrun m pt-only 0 test f\n",
      "run m pt-only 3 test e\n",
      "run m pt-only 0 ood e\n",
      "frobnicate\n",
  };
  for (const std::string& text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(ExperimentConfig::Parse(in, "."), ParseError) << text;
  }
}

TEST(Experiment, OracleScoresHundredAndUniformPredictsNothing) {
  TempDir dir;
  const Corpus f0 = SmallCorpus(1), f1 = SmallCorpus(2), ood = SmallCorpus(3);
  Corpus all = f0;
  for (const Corpus* extra : {&f1, &ood})
    all.instances.insert(all.instances.end(), extra->instances.begin(), extra->instances.end());
  const LabelSet labels = LabelSet::FromCorpus(all);
  for (const auto& [name, corpus] : {std::pair{"f0", &f0}, {"f1", &f1}, {"ood", &ood}}) {
    WriteFile(dir.path() / (std::string(name) + ".conll"), WriteConllString(*corpus));
    Save(dir.path() / (std::string("oracle_") + name + ".tsv"), OracleEmissions(*corpus, labels));
    Save(dir.path() / (std::string("uniform_") + name + ".tsv"), Uniform(*corpus, labels));
  }
  WriteFile(dir.path() / "exp.cfg",
            "fold 0 f0.conll\nfold 1 f1.conll\nood ood.conll\n"
            "run oracle pt-only 0 test oracle_f0.tsv\n"
            "run oracle pt-only 1 test oracle_f1.tsv\n"
            "run oracle pt-only 0 ood oracle_ood.tsv\n"
            "run uniform pt-only 0 test uniform_f0.tsv\n"
            "run uniform pt-only 1 test missing.tsv\n");
  const std::vector<RunRecord> records =
      RunExperiment(ExperimentConfig::Load(dir.path() / "exp.cfg"));
  ASSERT_EQ(records.size(), 5u);
  EXPECT_TRUE(std::is_sorted(records.begin(), records.end(),
                             [](const auto& a, const auto& b) { return a.key < b.key; }));
  for (const RunRecord& r : records) {
    if (r.key.model == "oracle") {
      EXPECT_FALSE(r.gap);
      EXPECT_EQ(F1Percent(r.report.overall), "100.00");
      EXPECT_EQ(r.report.overall.excess + r.report.overall.missed, 0);
    }
  }
  const RunRecord& uniform = records[3];
  EXPECT_EQ(uniform.key.model, "uniform");
  EXPECT_EQ(uniform.report.overall.correct + uniform.report.overall.excess, 0);
  EXPECT_GT(uniform.report.overall.missed, 0);
  EXPECT_TRUE(records[4].gap);
  EXPECT_NE(records[4].reason.find("missing.tsv"), std::string::npos);
}

TEST(Experiment, EveryDecompositionSumsToTotal) {
  TempDir dir;
  const Corpus gold = SmallCorpus(4);
  const LabelSet labels = LabelSet::FromCorpus(gold);
  EmissionFile noisy = OracleEmissions(gold, labels);
  SplitMix64 rng(4);
  for (EmissionMatrix& m : noisy.instances)
    for (int t = 0; t < m.num_tokens(); ++t)
      for (int j = 0; j < m.num_tags(); ++j) m.at(t, j) = -20.0 * rng.Uniform();
  Save(dir.path() / "noisy.tsv", noisy);
  const RunRecord r = EvaluateRun({"m", Scenario::kPtOnly, 0, EvalSet::kTest}, gold,
                                  dir.path() / "noisy.tsv");
  ASSERT_FALSE(r.gap);
  EXPECT_NEAR(r.decomposition.arg_id_error + r.decomposition.arg_class_error,
              r.decomposition.total_error, 1e-12);
}

TEST(Experiment, MismatchedEmissionsThrow) {
  TempDir dir;
  const Corpus gold = SmallCorpus(5);
  const LabelSet labels = LabelSet::FromCorpus(gold);
  EmissionFile file = OracleEmissions(gold, labels);
  file.instances.pop_back();
  Save(dir.path() / "short.tsv", file);
  EXPECT_THROW(EvaluateRun({"m", Scenario::kPtOnly, 0, EvalSet::kTest}, gold,
                           dir.path() / "short.tsv"),
               AlignmentError);
}

TEST(RunRecord, RoundTripThroughFiles) {
  TempDir dir;
  RunRecord gap;
  gap.key = {"mBERT", Scenario::kZeroShot, 3, EvalSet::kOutOfDomain};
  gap.gap = true;
  gap.reason = "missing emission file x.tsv";
  gap.source = "x.tsv";
  const std::vector<RunRecord> records = {
      Record("XLM-R", Scenario::kPlusEn, 0, EvalSet::kTest, 7, 3, 3,
             {{"A0", {4, 1, 1}}, {"V", {10, 0, 0}}}),
      gap};
  SaveRunRecords(dir.path(), records);
  EXPECT_TRUE(fs::exists(dir.path() / "XLM-R.+En.test.fold000.run"));
  EXPECT_TRUE(fs::exists(dir.path() / "mBERT.zero-shot.ood.fold003.run"));
  const std::vector<RunRecord> loaded = LoadRunRecords(dir.path());
  ASSERT_EQ(loaded.size(), 2u);
  EXPECT_EQ(loaded[0].key, records[0].key);
  EXPECT_EQ(loaded[0].report, records[0].report);
  EXPECT_EQ(loaded[0].unlabeled.overall, records[0].unlabeled.overall);
  EXPECT_TRUE(loaded[1].gap);
  EXPECT_EQ(loaded[1].reason, gap.reason);
}

TEST(Aggregate, MeanOfPerFoldF1) {
  const std::vector<RunRecord> records = {
      Record("m", Scenario::kPtOnly, 0, EvalSet::kTest, 7, 3, 3),   // F1 0.70
      Record("m", Scenario::kPtOnly, 1, EvalSet::kTest, 8, 2, 2)};  // F1 0.80
  const AggregateTable table = Aggregate(records);
  ASSERT_EQ(table.rows.size(), 1u);
  EXPECT_NEAR(table.rows[0].test.overall.f1, 0.75, 1e-15);
  EXPECT_EQ(table.rows[0].test_runs, 2);
  EXPECT_EQ(table.rows[0].best_fold, 1);
  EXPECT_EQ(table.rows[0].test.overall.correct, 15);
}

TEST(Aggregate, PooledUsesSummedCounts) {
  const std::vector<RunRecord> records = {
      Record("m", Scenario::kPtOnly, 0, EvalSet::kTest, 1, 0, 0),
      Record("m", Scenario::kPtOnly, 1, EvalSet::kTest, 1, 4, 4)};
  AggregateOptions options;
  options.pooled = true;
  EXPECT_NEAR(Aggregate(records, options).rows[0].test.overall.f1, 4.0 / 12.0, 1e-15);
  EXPECT_NEAR(Aggregate(records).rows[0].test.overall.f1, (1.0 + 0.2) / 2, 1e-15);
}

TEST(Aggregate, SingleFoldEqualsThatFold) {
  const RunRecord r = Record("m", Scenario::kPtOnly, 0, EvalSet::kTest, 5, 2, 4, {{"A0", {5, 2, 4}}});
  const AggregateTable table = Aggregate(std::vector<RunRecord>{r});
  EXPECT_EQ(table.rows[0].test.overall.f1, r.report.overall.f1);
  EXPECT_EQ(table.rows[0].test.overall.precision, r.report.overall.precision);
  EXPECT_EQ(table.rows[0].test.per_label.at("A0").f1, r.report.per_label.at("A0").f1);
}

TEST(Aggregate, PermutationInvariant) {
  std::vector<RunRecord> records;
  SplitMix64 rng(6);
  for (const char* model : {"a", "b"})
    for (int fold = 0; fold < 4; ++fold)
      for (EvalSet set : {EvalSet::kTest, EvalSet::kOutOfDomain})
        records.push_back(Record(model, Scenario::kPtOnly, fold, set, 1 + rng.Below(9),
                                 1 + rng.Below(9), 1 + rng.Below(9)));
  std::ostringstream first;
  WriteAggregateTsv(first, Aggregate(records));
  for (int round = 0; round < 5; ++round) {
    for (size_t i = records.size(); i > 1; --i) std::swap(records[i - 1], records[rng.Below(i)]);
    std::ostringstream again;
    WriteAggregateTsv(again, Aggregate(records));
    EXPECT_EQ(again.str(), first.str());
  }
}

TEST(Aggregate, DeltasAgainstPtOnlyOrBaseline) {
  const std::vector<RunRecord> records = {
      Record("x", Scenario::kPtOnly, 0, EvalSet::kTest, 7, 3, 3),
      Record("x", Scenario::kPlusEn, 0, EvalSet::kTest, 8, 2, 2),
      Record("base", Scenario::kPtOnly, 0, EvalSet::kTest, 6, 4, 4)};
  const AggregateTable own = Aggregate(records);
  for (const AggregateRow& row : own.rows) {
    if (row.scenario == Scenario::kPlusEn) {
      ASSERT_TRUE(row.test_delta);
      EXPECT_NEAR(row.test_delta->delta_f1, 0.1, 1e-12);
    } else {
      EXPECT_FALSE(row.test_delta);
    }
  }
  AggregateOptions options;
  options.baseline_model = "base";
  for (const AggregateRow& row : Aggregate(records, options).rows) {
    if (row.model == "base") {
      EXPECT_FALSE(row.test_delta);
    } else {
      ASSERT_TRUE(row.test_delta);
      EXPECT_NEAR(row.test_delta->delta_f1, row.test.overall.f1 - 0.6, 1e-12);
    }
  }
}

TEST(Aggregate, GapsAreListed) {
  RunRecord gap;
  gap.key = {"m", Scenario::kPtOnly, 1, EvalSet::kTest};
  gap.gap = true;
  const std::vector<RunRecord> records = {Record("m", Scenario::kPtOnly, 0, EvalSet::kTest, 1, 1, 1),
                                          gap};
  const AggregateTable table = Aggregate(records);
  EXPECT_EQ(table.rows[0].test_runs, 1);
  EXPECT_EQ(table.rows[0].gaps, std::vector<std::string>{"m.pt-only.test.fold001.run"});
  std::ostringstream out;
  WriteAggregateTable(out, table);
  EXPECT_NE(out.str().find("m.pt-only.test.fold001.run"), std::string::npos);
}

TEST(Select, HandBuiltCases) {
  for (const testing::SelectionCase& c : testing::SelectionCases())
    EXPECT_EQ(SelectModel(c.records, c.data, c.roles), c.expected) << c.name;
}

TEST(Select, AbsentRoleIsAnError) {
  const std::vector<RunRecord> records = {
      Record("A", Scenario::kPtOnly, 0, EvalSet::kTest, 9, 1, 1, {{"A0", {8, 0, 0}}})};
  try {
    SelectModel(records, DataKind::kClean, {"AM-XYZ"});
    FAIL() << "expected SelectionError";
  } catch (const SelectionError& error) {
    EXPECT_NE(std::string(error.what()).find("AM-XYZ"), std::string::npos);
  }
}

TEST(Select, InvariantUnderPositiveAffineRescaling) {
  SplitMix64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::string, double> scores;
    for (const char* name : {"a", "b", "c", "d"}) scores[name] = rng.Uniform();
    const double scale = 0.1 + 5 * rng.Uniform(), shift = 3 * rng.Uniform() - 1.5;
    std::map<std::string, double> rescaled;
    for (const auto& [name, s] : scores) rescaled[name] = scale * s + shift;
    EXPECT_EQ(BestCandidate(rescaled), BestCandidate(scores));
  }
}

TEST(Select, NoRecordsOfTheNeededKind) {
  const std::vector<RunRecord> records = {Record("A", Scenario::kPtOnly, 0, EvalSet::kTest, 1, 1, 1)};
  EXPECT_THROW(SelectModel(records, DataKind::kUnclean), SelectionError);
}

}  // namespace
}  // namespace srl
