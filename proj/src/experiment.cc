#include "srl/experiment.h"

#include <algorithm>
#include <charconv>
#include <exception>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "srl/conll.h"
#include "srl/emissions.h"
#include "srl/viterbi.h"

namespace srl {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> Fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream stream(line);
  std::string field;
  while (stream >> field) fields.push_back(field);
  return fields;
}

int ParseInt(const std::string& text, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("expected an integer, found '" + text + "'", line);
  return value;
}

Corpus LoadConll(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ParseConll(in);
}

EvalReport MeanReport(const std::vector<const EvalReport*>& reports, bool pooled) {
  EvalReport mean;
  if (reports.empty()) return mean;
  std::map<std::string, std::vector<const Metrics*>> by_label;
  double p = 0, r = 0, f = 0;
  for (const EvalReport* report : reports) {
    mean.instances += report->instances;
    mean.overall.correct += report->overall.correct;
    mean.overall.excess += report->overall.excess;
    mean.overall.missed += report->overall.missed;
    p += report->overall.precision;
    r += report->overall.recall;
    f += report->overall.f1;
    for (const auto& [label, m] : report->per_label) by_label[label].push_back(&m);
  }
  const double n = static_cast<double>(reports.size());
  if (pooled) {
    mean.overall = Metrics::FromCounts(mean.overall.correct, mean.overall.excess,
                                       mean.overall.missed);
  } else {
    mean.overall.precision = p / n;
    mean.overall.recall = r / n;
    mean.overall.f1 = f / n;
  }
  for (const auto& [label, metrics] : by_label) {
    Metrics m;
    double lp = 0, lr = 0, lf = 0;
    for (const Metrics* x : metrics) {
      m.correct += x->correct;
      m.excess += x->excess;
      m.missed += x->missed;
      lp += x->precision;
      lr += x->recall;
      lf += x->f1;
    }
    if (pooled) {
      m = Metrics::FromCounts(m.correct, m.excess, m.missed);
    } else {
      // A label absent from a fold's report scores 0 in that fold.
      m.precision = lp / n;
      m.recall = lr / n;
      m.f1 = lf / n;
    }
    mean.per_label[label] = m;
  }
  return mean;
}

ErrorDecomposition MeanErrors(const std::vector<const RunRecord*>& records) {
  ErrorDecomposition mean;
  if (records.empty()) return mean;
  for (const RunRecord* record : records) {
    mean.total_error += record->decomposition.total_error;
    mean.arg_id_error += record->decomposition.arg_id_error;
    mean.arg_class_error += record->decomposition.arg_class_error;
  }
  const double n = static_cast<double>(records.size());
  mean.total_error /= n;
  mean.arg_id_error /= n;
  mean.arg_class_error /= n;
  return mean;
}

void WriteCounts(std::ostream& out, const char* key, const Metrics& m) {
  out << key << '\t' << m.correct << '\t' << m.excess << '\t' << m.missed << '\n';
}

Metrics ReadCounts(const std::vector<std::string>& fields, size_t first, int line) {
  if (fields.size() != first + 3) throw ParseError("expected three counts", line);
  auto count = [&](size_t i) {
    long value = 0;
    const std::string& text = fields[first + i];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
      throw ParseError("bad count '" + text + "'", line);
    return value;
  };
  return Metrics::FromCounts(count(0), count(1), count(2));
}

std::string SafeFileName(std::string_view text) {
  std::string out;
  for (char c : text) {
    const bool keep = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                      c == '_' || c == '-' || c == '+' || c == '.';
    out.push_back(keep ? c : '_');
  }
  return out;
}

Metrics RestrictToRoles(const EvalReport& report, const std::vector<std::string>& roles) {
  long c = 0, e = 0, m = 0;
  for (const std::string& role : roles) {
    auto it = report.per_label.find(role);
    if (it == report.per_label.end()) continue;
    c += it->second.correct;
    e += it->second.excess;
    m += it->second.missed;
  }
  return Metrics::FromCounts(c, e, m);
}

}  // namespace

std::string_view ToString(Scenario scenario) {
  switch (scenario) {
    case Scenario::kPtOnly: return "pt-only";
    case Scenario::kPlusEn: return "+En";
    case Scenario::kZeroShot: return "zero-shot";
  }
  return "?";
}

std::string_view ToString(EvalSet set) { return set == EvalSet::kTest ? "test" : "ood"; }

Scenario ParseScenario(std::string_view name) {
  if (name == "pt-only") return Scenario::kPtOnly;
  if (name == "+En") return Scenario::kPlusEn;
  if (name == "zero-shot") return Scenario::kZeroShot;
  throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

EvalSet ParseEvalSet(std::string_view name) {
  if (name == "test") return EvalSet::kTest;
  if (name == "ood" || name == "buscape") return EvalSet::kOutOfDomain;
  throw std::invalid_argument("unknown evaluation set '" + std::string(name) + "'");
}

DataKind ParseDataKind(std::string_view name) {
  if (name == "clean") return DataKind::kClean;
  if (name == "unclean") return DataKind::kUnclean;
  throw std::invalid_argument("data kind must be clean or unclean, not '" + std::string(name) +
                              "'");
}

std::string CandidateName(const std::string& model, Scenario scenario) {
  switch (scenario) {
    case Scenario::kPtOnly: return model;
    case Scenario::kPlusEn: return model + "+En";
    case Scenario::kZeroShot: return model + "(zero-shot)";
  }
  return model;
}

ExperimentConfig ExperimentConfig::Parse(std::istream& in, const fs::path& base_dir) {
  ExperimentConfig config;
  auto resolve = [&](const std::string& path) {
    fs::path p(path);
    return p.is_absolute() ? p : base_dir / p;
  };
  std::set<RunKey> seen;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::vector<std::string> f = Fields(line);
    if (f.empty()) continue;
    const std::string& directive = f[0];
    try {
      if (directive == "name" && f.size() == 2) {
        config.name = f[1];
      } else if (directive == "baseline" && f.size() == 2) {
        config.baseline = f[1];
      } else if (directive == "fold" && f.size() == 3) {
        const int fold = ParseInt(f[1], line_number);
        if (!config.fold_gold.emplace(fold, resolve(f[2])).second)
          throw ParseError("fold " + f[1] + " declared twice", line_number);
      } else if (directive == "ood" && f.size() == 2) {
        config.ood_gold = resolve(f[1]);
      } else if (directive == "run" && f.size() == 6) {
        Run run;
        run.key.model = f[1];
        run.key.scenario = ParseScenario(f[2]);
        run.key.fold = ParseInt(f[3], line_number);
        run.key.set = ParseEvalSet(f[4]);
        run.emissions = resolve(f[5]);
        if (!seen.insert(run.key).second) throw ParseError("duplicate run", line_number);
        config.runs.push_back(std::move(run));
      } else {
        throw ParseError("cannot parse '" + directive + "' line with " +
                             std::to_string(f.size()) + " fields",
                         line_number);
      }
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what(), line_number);
    }
  }
  for (const Run& run : config.runs) {
    if (run.key.set == EvalSet::kTest && !config.fold_gold.contains(run.key.fold))
      throw ParseError("run on fold " + std::to_string(run.key.fold) + " but no such fold", 0);
    if (run.key.set == EvalSet::kOutOfDomain && !config.ood_gold)
      throw ParseError("ood run but no ood gold file", 0);
  }
  return config;
}

ExperimentConfig ExperimentConfig::Load(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return Parse(in, path.parent_path());
}

RunRecord EvaluateRun(const RunKey& key, const Corpus& gold, const fs::path& emissions_path) {
  RunRecord record;
  record.key = key;
  record.source = emissions_path.string();
  std::ifstream in(emissions_path);
  if (!in) {
    record.gap = true;
    record.reason = "missing emission file " + emissions_path.string();
    return record;
  }
  const EmissionFile emissions = ReadEmissions(in);
  const std::vector<Decoded> decoded = DecodeBatchSerial(emissions.instances, emissions.labels);
  std::vector<LabeledInstance> pred;
  pred.reserve(decoded.size());
  for (size_t i = 0; i < decoded.size(); ++i)
    pred.push_back({emissions.instances[i].instance_id(),
                    TagsToSpans(decoded[i].tags, emissions.labels)});
  const std::vector<LabeledInstance> gold_spans = ToLabeledInstances(gold);
  record.report = ScoreSerial(gold_spans, pred);
  record.unlabeled = ScoreUnlabeled(gold_spans, pred);
  record.decomposition = Decompose(record.report, record.unlabeled);
  return record;
}

std::vector<RunRecord> RunExperiment(const ExperimentConfig& config) {
  std::map<int, Corpus> fold_gold;
  for (const auto& [fold, path] : config.fold_gold) fold_gold[fold] = LoadConll(path);
  Corpus ood_gold;
  if (config.ood_gold) ood_gold = LoadConll(*config.ood_gold);

  const long n = static_cast<long>(config.runs.size());
  std::vector<RunRecord> records(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto& run = config.runs[i];
    try {
      const Corpus& gold =
          run.key.set == EvalSet::kTest ? fold_gold.at(run.key.fold) : ood_gold;
      records[i] = EvaluateRun(run.key, gold, run.emissions);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
  std::sort(records.begin(), records.end(),
            [](const RunRecord& a, const RunRecord& b) { return a.key < b.key; });
  return records;
}

void WriteRunRecord(std::ostream& out, const RunRecord& record) {
  out << "model\t" << record.key.model << '\n'
      << "scenario\t" << ToString(record.key.scenario) << '\n'
      << "fold\t" << record.key.fold << '\n'
      << "set\t" << ToString(record.key.set) << '\n'
      << "source\t" << record.source << '\n';
  if (record.gap) {
    out << "status\tgap\n" << "reason\t" << record.reason << '\n';
    return;
  }
  out << "status\tok\n" << "instances\t" << record.report.instances << '\n';
  WriteCounts(out, "labeled", record.report.overall);
  WriteCounts(out, "unlabeled", record.unlabeled.overall);
  out << "f1\t" << F1Percent(record.report.overall) << '\n'
      << "unlabeled_f1\t" << F1Percent(record.unlabeled.overall) << '\n';
  for (const auto& [label, m] : record.report.per_label) {
    out << "label\t" << label << '\t' << m.correct << '\t' << m.excess << '\t' << m.missed
        << '\n';
  }
}

RunRecord ReadRunRecord(std::istream& in) {
  RunRecord record;
  std::string line;
  int line_number = 0;
  bool status_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("run record: expected key<TAB>value", line_number);
    const std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    try {
      if (key == "model") {
        record.key.model = value;
      } else if (key == "scenario") {
        record.key.scenario = ParseScenario(value);
      } else if (key == "fold") {
        record.key.fold = ParseInt(value, line_number);
      } else if (key == "set") {
        record.key.set = ParseEvalSet(value);
      } else if (key == "source") {
        record.source = value;
      } else if (key == "status") {
        record.gap = value == "gap";
        status_seen = true;
      } else if (key == "reason") {
        record.reason = value;
      } else if (key == "instances") {
        record.report.instances = record.unlabeled.instances = ParseInt(value, line_number);
      } else if (key == "labeled") {
        record.report.overall = ReadCounts(Fields(line), 1, line_number);
      } else if (key == "unlabeled") {
        record.unlabeled.overall = ReadCounts(Fields(line), 1, line_number);
      } else if (key == "label") {
        const auto f = Fields(line);
        if (f.size() != 5) throw ParseError("label line needs 4 fields", line_number);
        record.report.per_label[f[1]] = ReadCounts(f, 2, line_number);
      }
      // Derived lines (f1, unlabeled_f1) are recomputed.
    } catch (const std::invalid_argument& error) {
      throw ParseError(error.what(), line_number);
    }
  }
  if (!status_seen || record.key.model.empty()) throw ParseError("incomplete run record", 0);
  if (!record.gap) record.decomposition = Decompose(record.report, record.unlabeled);
  return record;
}

std::string RunRecordFileName(const RunKey& key) {
  char fold[16];
  std::snprintf(fold, sizeof(fold), "%03d", key.fold);
  return SafeFileName(key.model) + "." + SafeFileName(ToString(key.scenario)) + "." +
         std::string(ToString(key.set)) + ".fold" + fold + ".run";
}

void SaveRunRecords(const fs::path& dir, std::span<const RunRecord> records) {
  fs::create_directories(dir);
  for (const RunRecord& record : records) {
    const fs::path path = dir / RunRecordFileName(record.key);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    WriteRunRecord(out, record);
  }
}

std::vector<RunRecord> LoadRunRecords(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".run") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<RunRecord> records;
  for (const fs::path& path : paths) {
    std::ifstream in(path);
    try {
      records.push_back(ReadRunRecord(in));
    } catch (const ParseError& error) {
      throw ParseError(path.string() + ": " + error.what(), 0);
    }
  }
  std::sort(records.begin(), records.end(),
            [](const RunRecord& a, const RunRecord& b) { return a.key < b.key; });
  return records;
}

AggregateTable Aggregate(std::span<const RunRecord> records, const AggregateOptions& options) {
  struct Group {
    std::vector<const RunRecord*> test, ood;
    std::vector<std::string> gaps;
  };
  std::map<std::pair<std::string, Scenario>, Group> groups;
  for (const RunRecord& record : records) {
    Group& g = groups[{record.key.model, record.key.scenario}];
    if (record.gap) {
      g.gaps.push_back(RunRecordFileName(record.key));
      continue;
    }
    (record.key.set == EvalSet::kTest ? g.test : g.ood).push_back(&record);
  }
  // Input order must not matter.
  for (auto& [key, g] : groups) {
    auto by_key = [](const RunRecord* a, const RunRecord* b) { return a->key < b->key; };
    std::sort(g.test.begin(), g.test.end(), by_key);
    std::sort(g.ood.begin(), g.ood.end(), by_key);
    std::sort(g.gaps.begin(), g.gaps.end());
  }

  AggregateTable table;
  table.pooled = options.pooled;
  for (const auto& [key, g] : groups) {
    AggregateRow row;
    row.model = key.first;
    row.scenario = key.second;
    row.candidate = CandidateName(row.model, row.scenario);
    row.test_runs = static_cast<int>(g.test.size());
    row.ood_runs = static_cast<int>(g.ood.size());
    row.gaps = g.gaps;
    std::vector<const EvalReport*> test_reports, ood_reports;
    for (const RunRecord* r : g.test) test_reports.push_back(&r->report);
    for (const RunRecord* r : g.ood) ood_reports.push_back(&r->report);
    row.test = MeanReport(test_reports, options.pooled);
    row.ood = MeanReport(ood_reports, options.pooled);
    row.test_errors = MeanErrors(g.test);
    row.ood_errors = MeanErrors(g.ood);
    for (const RunRecord* r : g.test) {
      if (!row.best_fold || r->report.overall.f1 > row.best.f1) {
        row.best_fold = r->key.fold;
        row.best = r->report.overall;
      }
    }
    table.rows.push_back(std::move(row));
  }

  auto find_row = [&](const std::string& model) -> const AggregateRow* {
    for (const AggregateRow& row : table.rows)
      if (row.model == model && row.scenario == Scenario::kPtOnly) return &row;
    return nullptr;
  };
  for (AggregateRow& row : table.rows) {
    const AggregateRow* reference = nullptr;
    if (options.baseline_model) {
      if (row.model != *options.baseline_model || row.scenario != Scenario::kPtOnly)
        reference = find_row(*options.baseline_model);
    } else if (row.scenario != Scenario::kPtOnly) {
      reference = find_row(row.model);
    }
    if (reference == nullptr) continue;
    if (row.test_runs > 0 && reference->test_runs > 0)
      row.test_delta = Compare(row.test, reference->test);
    if (row.ood_runs > 0 && reference->ood_runs > 0)
      row.ood_delta = Compare(row.ood, reference->ood);
  }
  return table;
}

void WriteAggregateTable(std::ostream& out, const AggregateTable& table) {
  char line[256];
  auto delta = [](const std::optional<DeltaRecord>& d) {
    return d ? Percent(d->delta_f1) : std::string("");
  };
  out << (table.pooled ? "Pooled" : "Average") << " of test folds and out-of-domain set\n\n";
  std::snprintf(line, sizeof(line), "%-22s | %7s %7s %7s %7s | %7s %7s %7s %7s\n", "Model", "p(%)",
                "r(%)", "F1", "dF1", "p(%)", "r(%)", "F1", "dF1");
  out << line << std::string(90, '-') << '\n';
  for (const AggregateRow& row : table.rows) {
    std::string test[3] = {"", "", ""}, ood[3] = {"", "", ""};
    if (row.test_runs > 0) {
      test[0] = Percent(row.test.overall.precision);
      test[1] = Percent(row.test.overall.recall);
      test[2] = Percent(row.test.overall.f1);
    }
    if (row.ood_runs > 0) {
      ood[0] = Percent(row.ood.overall.precision);
      ood[1] = Percent(row.ood.overall.recall);
      ood[2] = Percent(row.ood.overall.f1);
    }
    std::snprintf(line, sizeof(line), "%-22s | %7s %7s %7s %7s | %7s %7s %7s %7s\n",
                  row.candidate.c_str(), test[0].c_str(), test[1].c_str(), test[2].c_str(),
                  delta(row.test_delta).c_str(), ood[0].c_str(), ood[1].c_str(), ood[2].c_str(),
                  delta(row.ood_delta).c_str());
    out << line;
  }

  out << "\nBest model out of all folds\n\n";
  std::snprintf(line, sizeof(line), "%-22s | %5s %7s %7s %7s | %9s\n", "Model", "fold", "p(%)",
                "r(%)", "F1", "mean F1");
  out << line << std::string(66, '-') << '\n';
  for (const AggregateRow& row : table.rows) {
    if (!row.best_fold) continue;
    std::snprintf(line, sizeof(line), "%-22s | %5d %7s %7s %7s | %9s\n", row.candidate.c_str(),
                  *row.best_fold, PrecisionPercent(row.best).c_str(),
                  RecallPercent(row.best).c_str(), F1Percent(row.best).c_str(),
                  Percent(row.test.overall.f1).c_str());
    out << line;
  }

  out << "\nError decomposition (mean over folds, percent)\n\n";
  std::snprintf(line, sizeof(line), "%-22s | %7s %7s %7s | %7s %7s %7s\n", "Model", "total",
                "arg id", "class", "total", "arg id", "class");
  out << line << std::string(74, '-') << '\n';
  for (const AggregateRow& row : table.rows) {
    auto cells = [](int runs, const ErrorDecomposition& e) {
      if (runs == 0) return std::array<std::string, 3>{"", "", ""};
      return std::array<std::string, 3>{Percent(e.total_error), Percent(e.arg_id_error),
                                        Percent(e.arg_class_error)};
    };
    const auto t = cells(row.test_runs, row.test_errors);
    const auto o = cells(row.ood_runs, row.ood_errors);
    std::snprintf(line, sizeof(line), "%-22s | %7s %7s %7s | %7s %7s %7s\n", row.candidate.c_str(),
                  t[0].c_str(), t[1].c_str(), t[2].c_str(), o[0].c_str(), o[1].c_str(),
                  o[2].c_str());
    out << line;
  }

  bool any_gap = false;
  for (const AggregateRow& row : table.rows) {
    for (const std::string& gap : row.gaps) {
      if (!any_gap) out << "\nGaps (missing emission files)\n\n";
      any_gap = true;
      out << "  " << gap << '\n';
    }
  }
}

void WriteAggregateTsv(std::ostream& out, const AggregateTable& table) {
  out << "model\tscenario\ttest_runs\ttest_p\ttest_r\ttest_f1\ttest_df1\tood_runs\tood_p\tood_r"
         "\tood_f1\tood_df1\tbest_fold\tbest_p\tbest_r\tbest_f1\ttest_arg_id_error"
         "\ttest_arg_class_error\tood_arg_id_error\tood_arg_class_error\tgaps\n";
  for (const AggregateRow& row : table.rows) {
    auto opt = [](bool present, const std::string& value) { return present ? value : "-"; };
    out << row.model << '\t' << ToString(row.scenario) << '\t' << row.test_runs << '\t'
        << opt(row.test_runs, Percent(row.test.overall.precision)) << '\t'
        << opt(row.test_runs, Percent(row.test.overall.recall)) << '\t'
        << opt(row.test_runs, Percent(row.test.overall.f1)) << '\t'
        << opt(row.test_delta.has_value(), row.test_delta ? Percent(row.test_delta->delta_f1) : "")
        << '\t' << row.ood_runs << '\t' << opt(row.ood_runs, Percent(row.ood.overall.precision))
        << '\t' << opt(row.ood_runs, Percent(row.ood.overall.recall)) << '\t'
        << opt(row.ood_runs, Percent(row.ood.overall.f1)) << '\t'
        << opt(row.ood_delta.has_value(), row.ood_delta ? Percent(row.ood_delta->delta_f1) : "")
        << '\t' << opt(row.best_fold.has_value(), row.best_fold ? std::to_string(*row.best_fold) : "")
        << '\t' << opt(row.best_fold.has_value(), PrecisionPercent(row.best)) << '\t'
        << opt(row.best_fold.has_value(), RecallPercent(row.best)) << '\t'
        << opt(row.best_fold.has_value(), F1Percent(row.best)) << '\t'
        << opt(row.test_runs, Percent(row.test_errors.arg_id_error)) << '\t'
        << opt(row.test_runs, Percent(row.test_errors.arg_class_error)) << '\t'
        << opt(row.ood_runs, Percent(row.ood_errors.arg_id_error)) << '\t'
        << opt(row.ood_runs, Percent(row.ood_errors.arg_class_error)) << '\t'
        << row.gaps.size() << '\n';
  }
}

std::string BestCandidate(const std::map<std::string, double>& scores) {
  if (scores.empty()) throw SelectionError("no candidate models");
  auto best = scores.begin();
  for (auto it = scores.begin(); it != scores.end(); ++it)
    if (it->second > best->second) best = it;  // map order: ties keep the smaller name
  return best->first;
}

std::map<std::string, double> SelectionScores(std::span<const RunRecord> records, DataKind kind,
                                              const std::vector<std::string>& roles) {
  const EvalSet wanted = kind == DataKind::kClean ? EvalSet::kTest : EvalSet::kOutOfDomain;
  for (const std::string& role : roles) {
    const bool present = std::any_of(records.begin(), records.end(), [&](const RunRecord& r) {
      return !r.gap && r.report.per_label.contains(role);
    });
    if (!present) throw SelectionError("role '" + role + "' appears in no report");
  }
  std::map<std::string, std::pair<double, int>> sums;
  for (const RunRecord& record : records) {
    if (record.gap || record.key.set != wanted) continue;
    const double f1 =
        roles.empty() ? record.report.overall.f1 : RestrictToRoles(record.report, roles).f1;
    auto& [sum, count] = sums[CandidateName(record.key.model, record.key.scenario)];
    sum += f1;
    ++count;
  }
  std::map<std::string, double> scores;
  for (const auto& [name, sc] : sums) scores[name] = sc.first / sc.second;
  return scores;
}

std::string SelectModel(std::span<const RunRecord> records, DataKind kind,
                        const std::vector<std::string>& roles) {
  const auto scores = SelectionScores(records, kind, roles);
  if (scores.empty())
    throw SelectionError(std::string("no ") +
                         (kind == DataKind::kClean ? "test-fold" : "out-of-domain") +
                         " records to select from");
  return BestCandidate(scores);
}

}  // namespace srl
