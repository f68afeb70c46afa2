#ifndef SRL_CORPUS_H_
#define SRL_CORPUS_H_

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srl {

// Thrown by the corpus readers. Carries the 1-based input line when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A contiguous token range [start, end] (both inclusive) filling one role.
// The label never carries an IOB prefix.
struct ArgumentSpan {
  int start = 0;
  int end = 0;
  std::string label;

  auto operator<=>(const ArgumentSpan&) const = default;
  bool operator==(const ArgumentSpan&) const = default;
};

std::string ToString(const ArgumentSpan& span);

// Label of the predicate itself.
inline constexpr std::string_view kVerbLabel = "V";

bool IsContinuationLabel(std::string_view label);  // C-x
bool IsReferenceLabel(std::string_view label);     // R-x

// One sentence paired with one predicate position: the unit handed to a
// model. Instances of the same sentence share sentence_id and tokens.
struct Instance {
  std::string sentence_id;
  std::vector<std::string> tokens;
  int predicate_index = 0;
  // Column-2 marker of the predicate row (usually the verb lemma).
  std::string predicate_lemma;
  // Gold arguments, sorted. Readers for formats that allow overlapping
  // annotation may leave overlaps here until preprocessing removes them.
  std::vector<ArgumentSpan> spans;
  // Annotation flags (e.g. LATER, REEXAMINE), sorted and unique.
  std::vector<std::string> flags;

  // "<sentence_id>:<predicate_index>", unique within a corpus.
  std::string id() const;
  bool HasFlag(std::string_view flag) const;

  bool operator==(const Instance&) const = default;
};

// Splits an instance id produced by Instance::id(). Returns false when the
// id is not of that shape.
bool SplitInstanceId(std::string_view id, std::string* sentence_id, int* predicate_index);

struct Corpus {
  std::vector<Instance> instances;

  // Union of every span label (including V, C-x and R-x forms).
  std::set<std::string> LabelInventory() const;

  bool operator==(const Corpus&) const = default;
};

struct CorpusSummary {
  long instance_count = 0;
  // Non-V spans, counting a discontinuous argument once (C-x pieces skipped).
  long annotated_arg_count = 0;
  // Distinct labels excluding V and every C-x label.
  long role_count = 0;

  bool operator==(const CorpusSummary&) const = default;
};

CorpusSummary Summarize(const Corpus& corpus);

// Throws std::invalid_argument when tokens are empty or contain whitespace,
// when the predicate is out of range, or when a span is out of bounds.
void CheckInstance(const Instance& instance);

}  // namespace srl

#endif  // SRL_CORPUS_H_
