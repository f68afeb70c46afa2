#ifndef SRL_LABELS_H_
#define SRL_LABELS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "srl/corpus.h"

namespace srl {

enum class TagKind : uint8_t { kOutside, kBegin, kInside };

struct TagInfo {
  TagKind kind = TagKind::kOutside;
  int role = -1;  // index into LabelSet::roles(), -1 for O
};

// Per-token tag indices into a LabelSet.
using TagSequence = std::vector<int>;

class SpanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The IOB tag space over an ordered set of roles. Tag 0 is always O.
class LabelSet {
 public:
  LabelSet() : LabelSet(std::vector<std::string>{}) {}

  // Tags in the order O, B-r0, I-r0, B-r1, I-r1, ...
  explicit LabelSet(std::vector<std::string> roles);

  // Accepts tag names in any order, as found in an emission file header. O
  // must come first and every role needs both its B- and I- tag. Throws
  // std::invalid_argument otherwise.
  static LabelSet FromTagNames(std::span<const std::string> names);

  // Sorted label inventory of a corpus.
  static LabelSet FromCorpus(const Corpus& corpus);

  int size() const { return static_cast<int>(tags_.size()); }
  const std::vector<std::string>& roles() const { return roles_; }
  const std::vector<std::string>& tag_names() const { return names_; }
  const std::string& tag_name(int tag) const { return names_.at(tag); }
  const TagInfo& info(int tag) const { return tags_[tag]; }

  std::optional<int> tag_index(std::string_view name) const;
  std::optional<int> role_index(std::string_view role) const;
  int begin_tag(int role) const { return begin_[role]; }
  int inside_tag(int role) const { return inside_[role]; }

  // May tag `next` directly follow tag `previous`? Only I-x is restricted:
  // it must follow B-x or I-x.
  bool Allows(int previous, int next) const;
  // I-x never opens a sequence.
  bool AllowsFirst(int tag) const { return tags_[tag].kind != TagKind::kInside; }

  bool operator==(const LabelSet& other) const { return names_ == other.names_; }

 private:
  LabelSet(std::vector<std::string> roles, std::vector<std::string> names);
  void Index();

  std::vector<std::string> roles_;
  std::vector<std::string> names_;
  std::vector<TagInfo> tags_;
  std::vector<int> begin_;
  std::vector<int> inside_;
  std::unordered_map<std::string, int> by_name_;
  std::unordered_map<std::string, int> role_by_name_;
};

// True iff no I-x opens the sequence and every I-x follows B-x or I-x.
bool IsValidSequence(std::span<const int> tags, const LabelSet& labels);

// B-x at span start, I-x inside, O elsewhere. Throws SpanError on
// overlapping or out-of-range spans and on labels missing from the set.
TagSequence SpansToTags(std::span<const ArgumentSpan> spans, int length, const LabelSet& labels);

// Maximal runs B-x (I-x)* become spans. An I-x without a valid opener
// starts a new span, as if it were B-x; `repaired` receives their count.
std::vector<ArgumentSpan> TagsToSpans(std::span<const int> tags, const LabelSet& labels,
                                      int* repaired = nullptr);

}  // namespace srl

#endif  // SRL_LABELS_H_
