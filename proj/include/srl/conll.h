#ifndef SRL_CONLL_H_
#define SRL_CONLL_H_

#include <iosfwd>
#include <string>

#include "srl/corpus.h"

namespace srl {

// Column format, one token per line, blank line after each sentence:
//
//   column 1      surface form
//   column 2      "-" or the predicate lemma
//   column 3..    one props column per predicate, in sentence order
//
// Props cells are "(L*" (open), "*" (inside or outside), "*)" (close) and
// "(L*)" (single token). Nesting is a parse error. Columns may be separated
// by any whitespace on input; output uses tabs.
//
// A line "# sentence <ID>" directly before a sentence overrides its id.
// Without it the id is the 1-based position of the sentence in the file.
Corpus ParseConll(std::istream& in);
Corpus ParseConllString(const std::string& text);

// Writes the canonical form. Consecutive instances with the same
// sentence_id become one sentence block, with props columns ordered by
// predicate position. Throws std::invalid_argument if spans overlap or two
// instances of a sentence share a predicate position.
void WriteConll(std::ostream& out, const Corpus& corpus);
std::string WriteConllString(const Corpus& corpus);

}  // namespace srl

#endif  // SRL_CONLL_H_
