#include "srl/synthetic.h"

#include <algorithm>
#include <cmath>
#include <string_view>

#include "srl/rng.h"

namespace srl {
namespace {

template <size_t N>
const char* Pick(SplitMix64& rng, const char* const (&words)[N]) {
  return words[rng.Below(N)];
}

struct Noun {
  const char* word;
  bool feminine;
};

constexpr Noun kAgents[] = {{"governo", false}, {"empresa", true},  {"presidente", false},
                            {"ministra", true}, {"banco", false},   {"prefeita", true},
                            {"clube", false},   {"grupo", false},   {"juiz", false},
                            {"partido", false}};
constexpr Noun kThemes[] = {{"proposta", true}, {"acordo", false},    {"projeto", false},
                            {"contrato", false}, {"reforma", true},   {"plano", false},
                            {"relatório", false}, {"lei", true},      {"jogo", false},
                            {"prêmio", false}};
constexpr const char* kVerbs[][2] = {{"anunciou", "anunciar"}, {"aprovou", "aprovar"},
                                     {"assinou", "assinar"},   {"rejeitou", "rejeitar"},
                                     {"ganhou", "ganhar"},     {"vendeu", "vender"},
                                     {"apresentou", "apresentar"}, {"entregou", "entregar"}};
constexpr const char* kRecipients[] = {"Congresso", "mercado", "conselho", "sindicato"};
constexpr const char* kTimes[] = {"ontem", "hoje", "anteontem", "agora"};
constexpr const char* kPlaces[] = {"Brasília", "Lisboa", "Coimbra", "Porto", "Recife"};
constexpr const char* kManners[] = {"rapidamente", "discretamente", "oficialmente"};
constexpr const char* kAdjectives[][2] = {
    {"novo", "nova"}, {"polêmico", "polêmica"}, {"federal", "federal"}, {"antigo", "antiga"}};

const char* Determiner(SplitMix64& rng, const Noun& noun) {
  const bool definite = rng.Below(2) == 0;
  if (noun.feminine) return definite ? "a" : "uma";
  return definite ? "o" : "um";
}

struct Builder {
  std::vector<std::string> tokens;
  std::vector<ArgumentSpan> spans;

  int size() const { return static_cast<int>(tokens.size()); }
  void Add(std::initializer_list<std::string_view> words, const std::string& label) {
    const int start = size();
    for (std::string_view w : words) tokens.emplace_back(w);
    if (!label.empty()) spans.push_back({start, size() - 1, label});
  }
};

}  // namespace

Corpus SyntheticCorpus(const SyntheticOptions& options) {
  SplitMix64 rng(options.seed);
  Corpus corpus;
  for (int s = 1; s <= options.sentences; ++s) {
    Builder b;
    if (rng.Uniform() < 0.3) b.Add({Pick(rng, kTimes)}, "AM-TMP");
    const int agent_start = b.size();
    const Noun& agent = kAgents[rng.Below(std::size(kAgents))];
    b.Add({Determiner(rng, agent), agent.word}, "A0");
    if (rng.Uniform() < 0.25) b.Add({"que"}, "R-A0");
    if (rng.Uniform() < 0.2) b.Add({"não"}, "AM-NEG");
    const auto& verb = kVerbs[rng.Below(std::size(kVerbs))];
    const int predicate = b.size();
    b.Add({verb[0]}, "V");
    const bool split_theme = rng.Uniform() < 0.1;
    const Noun& theme = kThemes[rng.Below(std::size(kThemes))];
    if (rng.Uniform() < 0.5) {
      const char* adjective = kAdjectives[rng.Below(std::size(kAdjectives))][theme.feminine];
      b.Add({Determiner(rng, theme), theme.word, adjective}, "A1");
    } else {
      b.Add({Determiner(rng, theme), theme.word}, "A1");
    }
    if (split_theme) {
      b.Add({Pick(rng, kManners)}, "AM-MNR");
      b.Add({"de", Pick(rng, kPlaces)}, "C-A1");
    }
    if (rng.Uniform() < 0.3) b.Add({"para", "o", Pick(rng, kRecipients)}, "A2");
    if (rng.Uniform() < 0.3) b.Add({"em", Pick(rng, kPlaces)}, "AM-LOC");
    if (!split_theme && rng.Uniform() < 0.2) b.Add({Pick(rng, kManners)}, "AM-MNR");

    Instance first;
    first.sentence_id = std::to_string(s);
    first.predicate_index = predicate;
    first.predicate_lemma = verb[1];
    first.spans = b.spans;

    Instance second;
    const bool coordinated = rng.Uniform() < options.second_predicate;
    if (coordinated) {
      Builder tail;
      tail.tokens = b.tokens;
      tail.Add({"e"}, "");
      const auto& verb2 = kVerbs[rng.Below(std::size(kVerbs))];
      second.predicate_index = tail.size();
      second.predicate_lemma = verb2[1];
      tail.Add({verb2[0]}, "V");
      const Noun& theme2 = kThemes[rng.Below(std::size(kThemes))];
      tail.Add({Determiner(rng, theme2), theme2.word}, "A1");
      // The second predicate shares the subject.
      second.spans.push_back({agent_start, agent_start + 1, "A0"});
      for (const ArgumentSpan& span : tail.spans) second.spans.push_back(span);
      b.tokens = tail.tokens;
    }
    b.tokens.push_back(".");

    first.tokens = b.tokens;
    std::sort(first.spans.begin(), first.spans.end());
    corpus.instances.push_back(std::move(first));
    if (coordinated) {
      second.sentence_id = std::to_string(s);
      second.tokens = b.tokens;
      std::sort(second.spans.begin(), second.spans.end());
      corpus.instances.push_back(std::move(second));
    }
  }
  return corpus;
}

const std::vector<std::string>& PropBankLikeRoles() {
  static const std::vector<std::string> roles = {
      "A1",     "A0",     "AM-TMP", "A2",     "AM-ADV", "AM-NEG", "AM-LOC", "AM-MNR", "AM-DIS",
      "AM-PNC", "AM-CAU", "A3",     "AM-EXT", "R-A0",   "AM-PRD", "A4",     "AM-DIR", "R-A1",
      "AM-ADJ", "AM-GOL", "AM-PAR", "R-AM-LOC", "AM-REC", "A5",   "R-A2",   "R-AM-TMP"};
  return roles;
}

Corpus ZipfianLabelCorpus(int instances, double exponent, int max_labels, uint64_t seed) {
  const auto& roles = PropBankLikeRoles();
  std::vector<double> weight(roles.size());
  for (size_t r = 0; r < roles.size(); ++r) weight[r] = std::pow(static_cast<double>(r + 1), -exponent);

  SplitMix64 rng(seed);
  Corpus corpus;
  for (int i = 0; i < instances; ++i) {
    const int count = 1 + static_cast<int>(rng.Below(max_labels));
    std::vector<int> chosen;
    std::vector<double> w = weight;
    for (int c = 0; c < count; ++c) {
      double total = 0;
      for (double x : w) total += x;
      double draw = rng.Uniform() * total;
      size_t r = 0;
      while (r + 1 < w.size() && draw >= w[r]) draw -= w[r++];
      chosen.push_back(static_cast<int>(r));
      w[r] = 0;
    }
    std::sort(chosen.begin(), chosen.end());

    Instance instance;
    instance.sentence_id = std::to_string(i + 1);
    instance.tokens.push_back("verbo");
    instance.predicate_index = 0;
    instance.predicate_lemma = "verbo";
    instance.spans.push_back({0, 0, "V"});
    for (int r : chosen) {
      const int position = static_cast<int>(instance.tokens.size());
      instance.tokens.push_back("w" + std::to_string(r));
      instance.spans.push_back({position, position, roles[r]});
    }
    std::sort(instance.spans.begin(), instance.spans.end());
    corpus.instances.push_back(std::move(instance));
  }
  return corpus;
}

}  // namespace srl
