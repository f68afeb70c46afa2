#ifndef SRL_PREPROCESS_H_
#define SRL_PREPROCESS_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srl/corpus.h"

namespace srl {

// Cleaning rules. When enabled they always run in the declaration order
// below, whatever order they were requested in.
struct PreprocessRules {
  bool drop_multilabel = false;        // instances where a word has > 1 label
  bool split_underscore = false;       // "a_b" -> "a" "b"
  bool join_contractions = false;      // "de" "o" -> "do"
  bool drop_labels = false;            // delete spans with dropped_labels
  bool drop_flagged = false;           // delete instances with excluded_flags
  bool rechain_continuations = false;  // contiguous C-x back into x

  std::vector<std::string> dropped_labels = {"AM-MED", "AM-PIN"};
  std::vector<std::string> excluded_flags = {"WRONGSUBCORPUS", "LATER", "REEXAMINE"};

  static PreprocessRules All();
  // Comma-separated rule names, or "all". Throws std::invalid_argument.
  static PreprocessRules Parse(std::string_view names);
};

// Counts are per instance: a sentence with three predicates whose token is
// split counts three splits.
struct PreprocessReport {
  long multilabel_instances_dropped = 0;
  long tokens_split = 0;
  long contractions_joined = 0;
  long contraction_instances_rejected = 0;
  long label_spans_dropped = 0;
  long flagged_instances_dropped = 0;
  long continuations_rechained = 0;
  std::vector<std::string> rejected;  // "<instance id>: <reason>"

  bool AllZero() const;
  void Write(std::ostream& out) const;
};

// Maps (first word, second word) to the contracted form. Keys are lower case.
class ContractionLexicon {
 public:
  // Preposition + article/pronoun/demonstrative contractions of Portuguese.
  // Identical to data/contractions.tsv.
  static ContractionLexicon PortugueseDefault();
  // Lines "first<TAB>second<TAB>joined"; '#' starts a comment.
  static ContractionLexicon Load(std::istream& in);

  void Add(std::string first, std::string second, std::string joined);
  // Matching is case-insensitive for ASCII; the result is capitalized when
  // the first word is.
  std::optional<std::string> Join(std::string_view first, std::string_view second) const;
  size_t size() const { return entries_.size(); }

  bool operator==(const ContractionLexicon&) const = default;

 private:
  std::map<std::pair<std::string, std::string>, std::string> entries_;
};

Corpus Preprocess(const Corpus& corpus, const PreprocessRules& rules,
                  const ContractionLexicon& lexicon, PreprocessReport* report);

}  // namespace srl

#endif  // SRL_PREPROCESS_H_
