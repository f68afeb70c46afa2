#include "srl/cli.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "srl/baseline.h"
#include "srl/conll.h"
#include "srl/corpus.h"
#include "srl/emissions.h"
#include "srl/eval.h"
#include "srl/experiment.h"
#include "srl/preprocess.h"
#include "srl/stratify.h"
#include "srl/synthetic.h"
#include "srl/viterbi.h"
#include "srl/xml_reader.h"

namespace srl {
namespace {

namespace fs = std::filesystem;

constexpr const char* kVersion = SRL_VERSION;
constexpr int kFormatVersion = 1;

// Bad or missing input data; maps to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalConfig {
  int verbosity = 0;
  uint64_t seed = 42;
};

class Input {
 public:
  explicit Input(const std::string& path) : path_(path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw DataError("cannot open input file: " + path);
  }
  std::istream& stream() { return file_ ? *file_ : std::cin; }

 private:
  std::string path_;
  std::unique_ptr<std::ifstream> file_;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw DataError("cannot write output file: " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : fallback_; }

 private:
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
};

void RequireInput(const std::string& path) {
  if (path == "-") return;
  if (!fs::exists(path)) throw DataError("input file not found: " + path);
  if (fs::is_directory(path)) throw DataError("input path is a directory: " + path);
}

void RequireDirectory(const std::string& path) {
  if (!fs::is_directory(path)) throw DataError("directory not found: " + path);
}

void RequireOutputParent(const std::string& path) {
  if (path == "-") return;
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent))
    throw DataError("output directory does not exist: " + parent.string());
}

Corpus ReadConllFile(const std::string& path) {
  Input in(path);
  try {
    return ParseConll(in.stream());
  } catch (const ParseError& error) {
    throw DataError(path + ": " + error.what());
  }
}

void WriteConllFile(const std::string& path, const Corpus& corpus, std::ostream& out) {
  Output o(path, out);
  WriteConll(o.stream(), corpus);
}

EmissionFile ReadEmissionFile(const std::string& path) {
  Input in(path);
  try {
    return ReadEmissions(in.stream());
  } catch (const ParseError& error) {
    throw DataError(path + ": " + error.what());
  }
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ','))
    if (!item.empty()) items.push_back(item);
  return items;
}

void Log(const GlobalConfig& config, std::ostream& err, const std::string& message) {
  if (config.verbosity > 0) err << "srl: " << message << '\n';
}

// --- preprocess ---

struct PreprocessArgs {
  std::string in, format = "conll", rules = "all", out, report = "-", contractions;
};

void RunPreprocess(const PreprocessArgs& a, const GlobalConfig& g, std::ostream& out,
                   std::ostream& err) {
  RequireInput(a.in);
  if (!a.contractions.empty()) RequireInput(a.contractions);
  RequireOutputParent(a.out);
  RequireOutputParent(a.report);
  const PreprocessRules rules = PreprocessRules::Parse(a.rules);

  ContractionLexicon lexicon = ContractionLexicon::PortugueseDefault();
  if (!a.contractions.empty()) {
    Input lex(a.contractions);
    lexicon = ContractionLexicon::Load(lex.stream());
  }

  Corpus corpus;
  XmlReport xml_report;
  if (a.format == "conll") {
    corpus = ReadConllFile(a.in);
  } else {
    Input in(a.in);
    try {
      corpus = ParseXml(in.stream(), &xml_report);
    } catch (const ParseError& error) {
      throw DataError(a.in + ": " + error.what());
    }
    for (const std::string& w : xml_report.warnings) err << "srl: warning: " << w << '\n';
  }
  Log(g, err, "read " + std::to_string(corpus.instances.size()) + " instances");

  PreprocessReport report;
  const Corpus cleaned = Preprocess(corpus, rules, lexicon, &report);
  WriteConllFile(a.out, cleaned, out);

  Output r(a.report, out);
  r.stream() << "input_instances\t" << corpus.instances.size() << '\n'
             << "output_instances\t" << cleaned.instances.size() << '\n';
  for (const std::string& line : xml_report.rejected) r.stream() << "xml_rejected\t" << line << '\n';
  report.Write(r.stream());
  const CorpusSummary summary = Summarize(cleaned);
  r.stream() << "annotated_args\t" << summary.annotated_arg_count << '\n'
             << "roles\t" << summary.role_count << '\n';
}

// --- split ---

struct SplitArgs {
  std::string in, out_dir;
  int k = 10;
  bool validation = false;
  bool skip_cr = false;
};

std::string FoldName(int fold) {
  char name[32];
  std::snprintf(name, sizeof(name), "fold%02d", fold);
  return name;
}

void RunSplit(const SplitArgs& a, const GlobalConfig& g, std::ostream& out, std::ostream& err) {
  RequireInput(a.in);
  fs::create_directories(a.out_dir);
  const Corpus corpus = ReadConllFile(a.in);
  StratifyOptions options;
  options.include_continuation_and_reference = !a.skip_cr;
  FoldAssignment folds;
  try {
    folds = StratifiedFolds(corpus, a.k, g.seed, options);
  } catch (const std::invalid_argument& error) {
    throw DataError(error.what());
  }
  const fs::path dir(a.out_dir);
  for (int f = 0; f < a.k; ++f) {
    const Corpus test = SelectFold(corpus, folds, f);
    WriteConllFile((dir / (FoldName(f) + ".conll")).string(), test, out);
    if (a.validation) {
      Corpus train, dev;
      CarveValidation(SelectFold(corpus, folds, f, true),
                      static_cast<int>(test.instances.size()), g.seed + f, &train, &dev, options);
      WriteConllFile((dir / (FoldName(f) + ".train.conll")).string(), train, out);
      WriteConllFile((dir / (FoldName(f) + ".dev.conll")).string(), dev, out);
    }
  }
  Output manifest((dir / "manifest.tsv").string(), out);
  WriteManifest(manifest.stream(), folds);
  Log(g, err, "wrote " + std::to_string(a.k) + " folds to " + a.out_dir);
}

// --- baseline ---

struct BaselineArgs {
  std::string train, test, out;
};

void RunBaseline(const BaselineArgs& a, const GlobalConfig&, std::ostream& out, std::ostream&) {
  RequireInput(a.train);
  RequireInput(a.test);
  RequireOutputParent(a.out);
  const Corpus train = ReadConllFile(a.train);
  const Corpus test = ReadConllFile(a.test);
  std::set<std::string> roles = train.LabelInventory();
  for (const std::string& label : test.LabelInventory()) roles.insert(label);
  const LabelSet labels(std::vector<std::string>(roles.begin(), roles.end()));
  EmissionFile file;
  try {
    file = BaselineEmissions(train, test, labels);
  } catch (const SpanError& error) {
    throw DataError(a.train + ": " + error.what());
  }
  Output o(a.out, out);
  WriteEmissions(o.stream(), file);
}

// --- decode ---

struct DecodeArgs {
  std::string emissions, out, corpus;
  bool no_check = false;
};

void RunDecode(const DecodeArgs& a, const GlobalConfig& g, std::ostream& out, std::ostream& err) {
  RequireInput(a.emissions);
  if (!a.corpus.empty()) RequireInput(a.corpus);
  RequireOutputParent(a.out);
  const EmissionFile emissions = ReadEmissionFile(a.emissions);
  if (!a.no_check) {
    const auto problems = CheckEmissions(emissions);
    if (!problems.empty()) {
      for (size_t i = 0; i < problems.size() && i < 10; ++i) err << "srl: " << problems[i] << '\n';
      throw DataError(a.emissions + ": " + std::to_string(problems.size()) +
                      " format problems (use --no-check to decode anyway)");
    }
  }
  std::map<std::string, const Instance*> by_id;
  Corpus reference;
  if (!a.corpus.empty()) {
    reference = ReadConllFile(a.corpus);
    for (const Instance& instance : reference.instances) by_id[instance.id()] = &instance;
  }

  std::vector<Decoded> decoded;
  try {
    decoded = DecodeBatch(emissions.instances, emissions.labels);
  } catch (const DecodeError& error) {
    throw DataError(error.what());
  }

  Corpus predicted;
  for (size_t i = 0; i < decoded.size(); ++i) {
    const EmissionMatrix& matrix = emissions.instances[i];
    Instance instance;
    if (!SplitInstanceId(matrix.instance_id(), &instance.sentence_id, &instance.predicate_index))
      throw DataError("instance id '" + matrix.instance_id() + "' is not <sentence>:<predicate>");
    if (instance.predicate_index >= matrix.num_tokens())
      throw DataError(matrix.instance_id() + ": predicate index beyond the token count");
    if (auto it = by_id.find(matrix.instance_id()); it != by_id.end()) {
      if (static_cast<int>(it->second->tokens.size()) != matrix.num_tokens())
        throw DataError(matrix.instance_id() + ": token count differs from the corpus");
      instance.tokens = it->second->tokens;
      instance.predicate_lemma = it->second->predicate_lemma;
    } else if (!a.corpus.empty()) {
      throw DataError(matrix.instance_id() + ": not found in " + a.corpus);
    } else {
      instance.tokens.assign(matrix.num_tokens(), "_");
      instance.predicate_lemma = "_";
    }
    instance.spans = TagsToSpans(decoded[i].tags, emissions.labels);
    predicted.instances.push_back(std::move(instance));
  }
  try {
    WriteConllFile(a.out, predicted, out);
  } catch (const std::invalid_argument& error) {
    throw DataError(error.what());
  }
  Log(g, err, "decoded " + std::to_string(decoded.size()) + " instances");
}

// --- eval ---

struct EvalArgs {
  std::string gold, pred, out;
  bool unlabeled = false, decompose = false;
};

void RunEval(const EvalArgs& a, const GlobalConfig&, std::ostream& out, std::ostream&) {
  RequireInput(a.gold);
  RequireInput(a.pred);
  RequireOutputParent(a.out);
  const auto gold = ToLabeledInstances(ReadConllFile(a.gold));
  const auto pred = ToLabeledInstances(ReadConllFile(a.pred));
  EvalReport labeled, unlabeled;
  ErrorDecomposition decomposition;
  try {
    labeled = Score(gold, pred);
    if (a.unlabeled || a.decompose) unlabeled = ScoreUnlabeled(gold, pred);
  } catch (const AlignmentError& error) {
    throw DataError(error.what());
  }
  if (a.decompose) decomposition = Decompose(labeled, unlabeled);
  const EvalReport* u = a.unlabeled || a.decompose ? &unlabeled : nullptr;
  const ErrorDecomposition* d = a.decompose ? &decomposition : nullptr;
  {
    Output o(a.out, out);
    WriteReportTable(o.stream(), labeled, u, d);
  }
  Output kv(a.out == "-" ? "-" : a.out + ".kv", out);
  WriteReportKeyValue(kv.stream(), labeled, u, d);
}

// --- run / report / select ---

struct RunArgs {
  std::string config, out_dir;
};

void RunRun(const RunArgs& a, const GlobalConfig& g, std::ostream&, std::ostream& err) {
  RequireInput(a.config);
  ExperimentConfig config;
  try {
    config = ExperimentConfig::Load(a.config);
  } catch (const ParseError& error) {
    throw DataError(a.config + ": " + error.what());
  }
  for (const auto& [fold, path] : config.fold_gold) RequireInput(path.string());
  if (config.ood_gold) RequireInput(config.ood_gold->string());
  std::vector<RunRecord> records;
  try {
    records = RunExperiment(config);
  } catch (const ParseError& error) {
    throw DataError(error.what());
  } catch (const AlignmentError& error) {
    throw DataError(error.what());
  } catch (const DecodeError& error) {
    throw DataError(error.what());
  }
  SaveRunRecords(a.out_dir, records);
  std::ofstream manifest(fs::path(a.out_dir) / "experiment.txt");
  manifest << "name\t" << config.name << '\n';
  if (config.baseline) manifest << "baseline\t" << *config.baseline << '\n';
  manifest << "runs\t" << records.size() << '\n';
  for (const RunRecord& record : records) {
    if (record.gap) err << "srl: gap: " << RunRecordFileName(record.key) << ": " << record.reason << '\n';
  }
  Log(g, err, "wrote " + std::to_string(records.size()) + " run records");
}

std::optional<std::string> ManifestBaseline(const fs::path& dir) {
  std::ifstream in(dir / "experiment.txt");
  std::string line;
  while (std::getline(in, line))
    if (line.starts_with("baseline\t")) return line.substr(9);
  return std::nullopt;
}

struct ReportArgs {
  std::string runs, format = "table", baseline, out = "-";
  bool pooled = false;
};

void RunReport(const ReportArgs& a, const GlobalConfig&, std::ostream& out, std::ostream&) {
  RequireDirectory(a.runs);
  RequireOutputParent(a.out);
  std::vector<RunRecord> records;
  try {
    records = LoadRunRecords(a.runs);
  } catch (const ParseError& error) {
    throw DataError(error.what());
  }
  AggregateOptions options;
  options.pooled = a.pooled;
  options.baseline_model = a.baseline.empty() ? ManifestBaseline(a.runs) : a.baseline;
  const AggregateTable table = Aggregate(records, options);
  Output o(a.out, out);
  if (a.format == "tsv") {
    WriteAggregateTsv(o.stream(), table);
  } else {
    WriteAggregateTable(o.stream(), table);
  }
}

struct SelectArgs {
  std::string runs, data = "clean", roles, out = "-";
};

void RunSelect(const SelectArgs& a, const GlobalConfig&, std::ostream& out, std::ostream&) {
  RequireDirectory(a.runs);
  std::vector<RunRecord> records;
  try {
    records = LoadRunRecords(a.runs);
  } catch (const ParseError& error) {
    throw DataError(error.what());
  }
  std::vector<std::string> roles;
  if (!a.roles.empty() && a.roles != "all") roles = SplitList(a.roles);
  std::string chosen;
  try {
    chosen = SelectModel(records, ParseDataKind(a.data), roles);
  } catch (const SelectionError& error) {
    throw DataError(error.what());
  }
  Output o(a.out, out);
  o.stream() << chosen << '\n';
}

// --- stats / synth ---

struct StatsArgs {
  std::string in, format = "conll", out = "-";
};

void RunStats(const StatsArgs& a, const GlobalConfig&, std::ostream& out, std::ostream& err) {
  RequireInput(a.in);
  Corpus corpus;
  if (a.format == "conll") {
    corpus = ReadConllFile(a.in);
  } else {
    Input in(a.in);
    XmlReport report;
    try {
      corpus = ParseXml(in.stream(), &report);
    } catch (const ParseError& error) {
      throw DataError(a.in + ": " + error.what());
    }
    for (const std::string& w : report.warnings) err << "srl: warning: " << w << '\n';
  }
  const CorpusSummary summary = Summarize(corpus);
  Output o(a.out, out);
  o.stream() << "instances\t" << summary.instance_count << '\n'
             << "annotated_args\t" << summary.annotated_arg_count << '\n'
             << "roles\t" << summary.role_count << '\n';
}

struct SynthArgs {
  std::string out;
  int sentences = 100;
};

void RunSynth(const SynthArgs& a, const GlobalConfig& g, std::ostream& out, std::ostream&) {
  RequireOutputParent(a.out);
  SyntheticOptions options;
  options.sentences = a.sentences;
  options.seed = g.seed;
  WriteConllFile(a.out, SyntheticCorpus(options), out);
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantic role labeling experiment toolkit", "srl"};
  app.require_subcommand(1);
  GlobalConfig global;
  app.set_version_flag("--version",
                       std::string("srl ") + kVersion + " (conll format " +
                           std::to_string(kFormatVersion) + ", emission format " +
                           std::to_string(kFormatVersion) + ", run record format " +
                           std::to_string(kFormatVersion) + ")");
  app.add_flag("-v,--verbose", global.verbosity, "Log progress to stderr");

  PreprocessArgs pre;
  auto* preprocess = app.add_subcommand("preprocess", "Clean a corpus and write CoNLL");
  preprocess->add_option("--in", pre.in, "Input corpus ('-' for stdin)")->required();
  preprocess->add_option("--format", pre.format, "conll or xml")
      ->check(CLI::IsMember({"conll", "xml"}));
  preprocess->add_option("--rules", pre.rules, "Comma-separated rules or 'all'");
  preprocess->add_option("--out", pre.out, "Output CoNLL file")->required();
  preprocess->add_option("--report", pre.report, "Report file ('-' for stdout)");
  preprocess->add_option("--contractions", pre.contractions, "Contraction lexicon TSV");

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "Stratified k-fold split");
  split_cmd->add_option("--in", split.in, "Input CoNLL file")->required();
  split_cmd->add_option("--k", split.k, "Number of folds");
  split_cmd->add_option("--seed", global.seed, "RNG seed");
  split_cmd->add_option("--out-dir", split.out_dir, "Output directory")->required();
  split_cmd->add_flag("--validation", split.validation,
                      "Also write train/dev files carved from the other folds");
  split_cmd->add_flag("--no-continuation-labels", split.skip_cr,
                      "Do not stratify on C-x and R-x labels");

  BaselineArgs base;
  auto* baseline = app.add_subcommand("baseline", "Frequency-model emissions for a test corpus");
  baseline->add_option("--train", base.train, "Training CoNLL file")->required();
  baseline->add_option("--test", base.test, "Test CoNLL file")->required();
  baseline->add_option("--out", base.out, "Emission file")->required();

  DecodeArgs dec;
  auto* decode = app.add_subcommand("decode", "Constrained Viterbi decoding of emissions");
  decode->add_option("--emissions", dec.emissions, "Emission file ('-' for stdin)")->required();
  decode->add_option("--out", dec.out, "Predicted CoNLL file")->required();
  decode->add_option("--corpus", dec.corpus, "CoNLL file supplying surface forms");
  decode->add_flag("--no-check", dec.no_check, "Skip the softmax normalization check");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Span scoring of predictions against gold");
  eval->add_option("--gold", ev.gold, "Gold CoNLL file")->required();
  eval->add_option("--pred", ev.pred, "Predicted CoNLL file")->required();
  eval->add_flag("--unlabeled", ev.unlabeled, "Add boundary-only scores");
  eval->add_flag("--decompose", ev.decompose, "Add the error decomposition");
  eval->add_option("--out", ev.out, "Report file; key-value copy goes to <out>.kv")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Score every run of an experiment config");
  run_cmd->add_option("--config", run.config, "Experiment config")->required();
  run_cmd->add_option("--out-dir", run.out_dir, "Directory for run records")->required();

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "Aggregate run records into tables");
  report->add_option("--runs", rep.runs, "Run record directory")->required();
  report->add_option("--format", rep.format, "table or tsv")->check(CLI::IsMember({"table", "tsv"}));
  report->add_option("--baseline", rep.baseline, "Reference model for delta F1");
  report->add_flag("--pooled", rep.pooled, "Pooled counts instead of per-fold means");
  report->add_option("--out", rep.out, "Output file ('-' for stdout)");

  SelectArgs sel;
  auto* select = app.add_subcommand("select", "Pick a model for a use case");
  select->add_option("--runs", sel.runs, "Run record directory")->required();
  select->add_option("--data", sel.data, "clean or unclean")
      ->check(CLI::IsMember({"clean", "unclean"}));
  select->add_option("--roles", sel.roles, "Comma-separated roles of interest, or 'all'");
  select->add_option("--out", sel.out, "Output file ('-' for stdout)");

  StatsArgs st;
  auto* stats = app.add_subcommand("stats", "Instance, argument and role counts");
  stats->add_option("--in", st.in, "Input corpus")->required();
  stats->add_option("--format", st.format, "conll or xml")->check(CLI::IsMember({"conll", "xml"}));
  stats->add_option("--out", st.out, "Output file ('-' for stdout)");

  SynthArgs syn;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic CoNLL corpus");
  synth->add_option("--sentences", syn.sentences, "Number of sentences")
      ->check(CLI::PositiveNumber);
  synth->add_option("--seed", global.seed, "RNG seed");
  synth->add_option("--out", syn.out, "Output CoNLL file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*preprocess) RunPreprocess(pre, global, out, err);
    else if (*split_cmd) RunSplit(split, global, out, err);
    else if (*baseline) RunBaseline(base, global, out, err);
    else if (*decode) RunDecode(dec, global, out, err);
    else if (*eval) RunEval(ev, global, out, err);
    else if (*run_cmd) RunRun(run, global, out, err);
    else if (*report) RunReport(rep, global, out, err);
    else if (*select) RunSelect(sel, global, out, err);
    else if (*stats) RunStats(st, global, out, err);
    else if (*synth) RunSynth(syn, global, out, err);
  } catch (const DataError& error) {
    err << "srl: error: " << error.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& error) {
    err << "srl: usage error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "srl: error: " << error.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace srl
