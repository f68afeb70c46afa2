#include "srl/preprocess.h"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace srl {
namespace {

struct ContractionEntry {
  const char* first;
  const char* second;
  const char* joined;
};

constexpr ContractionEntry kPortugueseContractions[] = {
    {"a", "a", "à"},
    {"a", "as", "às"},
    {"a", "o", "ao"},
    {"a", "os", "aos"},
    {"a", "aquele", "àquele"},
    {"a", "aquela", "àquela"},
    {"a", "aqueles", "àqueles"},
    {"a", "aquelas", "àquelas"},
    {"a", "aquilo", "àquilo"},
    {"de", "a", "da"},
    {"de", "as", "das"},
    {"de", "o", "do"},
    {"de", "os", "dos"},
    {"de", "ele", "dele"},
    {"de", "ela", "dela"},
    {"de", "eles", "deles"},
    {"de", "elas", "delas"},
    {"de", "este", "deste"},
    {"de", "esta", "desta"},
    {"de", "estes", "destes"},
    {"de", "estas", "destas"},
    {"de", "isto", "disto"},
    {"de", "esse", "desse"},
    {"de", "essa", "dessa"},
    {"de", "esses", "desses"},
    {"de", "essas", "dessas"},
    {"de", "isso", "disso"},
    {"de", "aquele", "daquele"},
    {"de", "aquela", "daquela"},
    {"de", "aqueles", "daqueles"},
    {"de", "aquelas", "daquelas"},
    {"de", "aquilo", "daquilo"},
    {"de", "aqui", "daqui"},
    {"de", "ali", "dali"},
    {"de", "onde", "donde"},
    {"de", "um", "dum"},
    {"de", "uma", "duma"},
    {"em", "a", "na"},
    {"em", "as", "nas"},
    {"em", "o", "no"},
    {"em", "os", "nos"},
    {"em", "ele", "nele"},
    {"em", "ela", "nela"},
    {"em", "eles", "neles"},
    {"em", "elas", "nelas"},
    {"em", "este", "neste"},
    {"em", "esta", "nesta"},
    {"em", "estes", "nestes"},
    {"em", "estas", "nestas"},
    {"em", "isto", "nisto"},
    {"em", "esse", "nesse"},
    {"em", "essa", "nessa"},
    {"em", "esses", "nesses"},
    {"em", "essas", "nessas"},
    {"em", "isso", "nisso"},
    {"em", "aquele", "naquele"},
    {"em", "aquela", "naquela"},
    {"em", "aqueles", "naqueles"},
    {"em", "aquelas", "naquelas"},
    {"em", "aquilo", "naquilo"},
    {"em", "um", "num"},
    {"em", "uma", "numa"},
    {"em", "uns", "nuns"},
    {"em", "umas", "numas"},
    {"por", "a", "pela"},
    {"por", "as", "pelas"},
    {"por", "o", "pelo"},
    {"por", "os", "pelos"},
};

std::string AsciiLower(std::string_view text) {
  std::string lower(text);
  for (char& c : lower)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return lower;
}

std::string Capitalize(std::string word) {
  if (word.empty()) return word;
  if (word[0] >= 'a' && word[0] <= 'z') {
    word[0] = static_cast<char>(word[0] - 'a' + 'A');
  } else if (word.starts_with("\xC3\xA0")) {  // à -> À
    word[1] = '\x80';
  }
  return word;
}

bool CoveredMoreThanOnce(const Instance& instance) {
  std::vector<int> cover(instance.tokens.size(), 0);
  for (const ArgumentSpan& span : instance.spans)
    for (int t = span.start; t <= span.end; ++t)
      if (++cover[t] > 1) return true;
  return false;
}

// Returns the number of tokens that were split.
long SplitUnderscores(Instance* instance) {
  std::vector<std::string> tokens;
  std::vector<int> first(instance->tokens.size());
  std::vector<int> last(instance->tokens.size());
  long split = 0;
  for (size_t i = 0; i < instance->tokens.size(); ++i) {
    const std::string& token = instance->tokens[i];
    std::vector<std::string> pieces;
    std::string piece;
    std::istringstream stream(token);
    while (std::getline(stream, piece, '_'))
      if (!piece.empty()) pieces.push_back(piece);
    if (pieces.size() <= 1 || token.find('_') == std::string::npos) {
      pieces.assign(1, token);
    } else {
      ++split;
    }
    first[i] = static_cast<int>(tokens.size());
    for (std::string& p : pieces) tokens.push_back(std::move(p));
    last[i] = static_cast<int>(tokens.size()) - 1;
  }
  if (split == 0) return 0;
  for (ArgumentSpan& span : instance->spans) {
    span.start = first[span.start];
    span.end = last[span.end];
  }
  instance->predicate_index = first[instance->predicate_index];
  instance->tokens = std::move(tokens);
  return split;
}

// Returns the number of joined pairs, or -1 (with *reason set) when a pair
// straddles a span boundary.
long JoinContractions(Instance* instance, const ContractionLexicon& lexicon,
                      std::string* reason) {
  const int n = static_cast<int>(instance->tokens.size());
  std::vector<std::string> tokens;
  std::vector<int> position(n);
  long joined = 0;
  for (int i = 0; i < n; ++i) {
    position[i] = static_cast<int>(tokens.size());
    if (i + 1 < n) {
      if (auto merged = lexicon.Join(instance->tokens[i], instance->tokens[i + 1])) {
        for (const ArgumentSpan& span : instance->spans) {
          const bool ends_inside = span.start <= i && span.end == i;
          const bool starts_inside = span.start == i + 1;
          if (ends_inside || starts_inside) {
            *reason = "contraction '" + instance->tokens[i] + " " + instance->tokens[i + 1] +
                      "' crosses the boundary of " + ToString(span);
            return -1;
          }
        }
        position[i + 1] = position[i];
        tokens.push_back(std::move(*merged));
        ++joined;
        ++i;
        continue;
      }
    }
    tokens.push_back(instance->tokens[i]);
  }
  if (joined == 0) return 0;
  for (ArgumentSpan& span : instance->spans) {
    span.start = position[span.start];
    span.end = position[span.end];
  }
  instance->predicate_index = position[instance->predicate_index];
  instance->tokens = std::move(tokens);
  return joined;
}

// Merges C-x spans into an immediately preceding x (or C-x) span.
long Rechain(Instance* instance) {
  std::sort(instance->spans.begin(), instance->spans.end());
  std::vector<ArgumentSpan> out;
  long merged = 0;
  for (const ArgumentSpan& span : instance->spans) {
    if (IsContinuationLabel(span.label)) {
      const std::string base = span.label.substr(2);
      auto previous = std::find_if(out.begin(), out.end(), [&](const ArgumentSpan& p) {
        return p.end + 1 == span.start && (p.label == base || p.label == span.label);
      });
      if (previous != out.end()) {
        previous->end = span.end;
        ++merged;
        continue;
      }
    }
    out.push_back(span);
  }
  instance->spans = std::move(out);
  return merged;
}

}  // namespace

PreprocessRules PreprocessRules::All() {
  PreprocessRules rules;
  rules.drop_multilabel = rules.split_underscore = rules.join_contractions = true;
  rules.drop_labels = rules.drop_flagged = rules.rechain_continuations = true;
  return rules;
}

PreprocessRules PreprocessRules::Parse(std::string_view names) {
  PreprocessRules rules;
  std::istringstream stream{std::string(names)};
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (name.empty()) continue;
    if (name == "all") {
      rules = All();
    } else if (name == "drop_multilabel") {
      rules.drop_multilabel = true;
    } else if (name == "split_underscore") {
      rules.split_underscore = true;
    } else if (name == "join_contractions") {
      rules.join_contractions = true;
    } else if (name == "drop_labels") {
      rules.drop_labels = true;
    } else if (name == "drop_flagged") {
      rules.drop_flagged = true;
    } else if (name == "rechain_continuations") {
      rules.rechain_continuations = true;
    } else {
      throw std::invalid_argument("unknown preprocessing rule '" + name + "'");
    }
  }
  return rules;
}

bool PreprocessReport::AllZero() const {
  return multilabel_instances_dropped == 0 && tokens_split == 0 && contractions_joined == 0 &&
         contraction_instances_rejected == 0 && label_spans_dropped == 0 &&
         flagged_instances_dropped == 0 && continuations_rechained == 0 && rejected.empty();
}

void PreprocessReport::Write(std::ostream& out) const {
  out << "multilabel_instances_dropped\t" << multilabel_instances_dropped << '\n'
      << "tokens_split\t" << tokens_split << '\n'
      << "contractions_joined\t" << contractions_joined << '\n'
      << "contraction_instances_rejected\t" << contraction_instances_rejected << '\n'
      << "label_spans_dropped\t" << label_spans_dropped << '\n'
      << "flagged_instances_dropped\t" << flagged_instances_dropped << '\n'
      << "continuations_rechained\t" << continuations_rechained << '\n';
  for (const std::string& line : rejected) out << "rejected\t" << line << '\n';
}

ContractionLexicon ContractionLexicon::PortugueseDefault() {
  ContractionLexicon lexicon;
  for (const ContractionEntry& entry : kPortugueseContractions)
    lexicon.Add(entry.first, entry.second, entry.joined);
  return lexicon;
}

ContractionLexicon ContractionLexicon::Load(std::istream& in) {
  ContractionLexicon lexicon;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string first, second, joined, extra;
    if (!(fields >> first >> second >> joined) || (fields >> extra))
      throw ParseError("contraction lexicon: expected 3 fields", line_number);
    lexicon.Add(first, second, joined);
  }
  return lexicon;
}

void ContractionLexicon::Add(std::string first, std::string second, std::string joined) {
  entries_[{AsciiLower(first), AsciiLower(second)}] = std::move(joined);
}

std::optional<std::string> ContractionLexicon::Join(std::string_view first,
                                                    std::string_view second) const {
  auto it = entries_.find({AsciiLower(first), AsciiLower(second)});
  if (it == entries_.end()) return std::nullopt;
  const bool capital = !first.empty() && first[0] >= 'A' && first[0] <= 'Z';
  return capital ? Capitalize(it->second) : it->second;
}

Corpus Preprocess(const Corpus& corpus, const PreprocessRules& rules,
                  const ContractionLexicon& lexicon, PreprocessReport* report) {
  Corpus out;
  for (const Instance& original : corpus.instances) {
    Instance instance = original;
    if (rules.drop_multilabel && CoveredMoreThanOnce(instance)) {
      ++report->multilabel_instances_dropped;
      continue;
    }
    if (rules.split_underscore) report->tokens_split += SplitUnderscores(&instance);
    if (rules.join_contractions) {
      std::string reason;
      const long joined = JoinContractions(&instance, lexicon, &reason);
      if (joined < 0) {
        ++report->contraction_instances_rejected;
        report->rejected.push_back(instance.id() + ": " + reason);
        continue;
      }
      report->contractions_joined += joined;
    }
    if (rules.drop_labels) {
      const auto removed = std::erase_if(instance.spans, [&](const ArgumentSpan& span) {
        return std::find(rules.dropped_labels.begin(), rules.dropped_labels.end(), span.label) !=
               rules.dropped_labels.end();
      });
      report->label_spans_dropped += static_cast<long>(removed);
    }
    if (rules.drop_flagged) {
      const bool flagged = std::any_of(rules.excluded_flags.begin(), rules.excluded_flags.end(),
                                       [&](const std::string& f) { return instance.HasFlag(f); });
      if (flagged) {
        ++report->flagged_instances_dropped;
        continue;
      }
    }
    if (rules.rechain_continuations) report->continuations_rechained += Rechain(&instance);
    std::sort(instance.spans.begin(), instance.spans.end());
    out.instances.push_back(std::move(instance));
  }
  return out;
}

}  // namespace srl
