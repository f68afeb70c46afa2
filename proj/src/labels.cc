#include "srl/labels.h"

#include <algorithm>

namespace srl {

LabelSet::LabelSet(std::vector<std::string> roles) : roles_(std::move(roles)) {
  names_.push_back("O");
  for (const std::string& role : roles_) {
    names_.push_back("B-" + role);
    names_.push_back("I-" + role);
  }
  Index();
}

LabelSet::LabelSet(std::vector<std::string> roles, std::vector<std::string> names)
    : roles_(std::move(roles)), names_(std::move(names)) {
  Index();
}

void LabelSet::Index() {
  tags_.assign(names_.size(), TagInfo{});
  begin_.assign(roles_.size(), -1);
  inside_.assign(roles_.size(), -1);
  by_name_.clear();
  role_by_name_.clear();
  for (size_t r = 0; r < roles_.size(); ++r) {
    if (!role_by_name_.emplace(roles_[r], static_cast<int>(r)).second)
      throw std::invalid_argument("duplicate role '" + roles_[r] + "'");
  }
  for (size_t t = 0; t < names_.size(); ++t) {
    const std::string& name = names_[t];
    if (!by_name_.emplace(name, static_cast<int>(t)).second)
      throw std::invalid_argument("duplicate tag '" + name + "'");
    if (name == "O") continue;
    const int role = role_by_name_.at(name.substr(2));
    const bool begin = name[0] == 'B';
    tags_[t] = TagInfo{begin ? TagKind::kBegin : TagKind::kInside, role};
    (begin ? begin_ : inside_)[role] = static_cast<int>(t);
  }
}

LabelSet LabelSet::FromTagNames(std::span<const std::string> names) {
  if (names.empty() || names[0] != "O")
    throw std::invalid_argument("tag list must start with O");
  std::vector<std::string> roles;
  for (size_t t = 1; t < names.size(); ++t) {
    const std::string& name = names[t];
    if (name.size() < 3 || (name[0] != 'B' && name[0] != 'I') || name[1] != '-')
      throw std::invalid_argument("malformed tag '" + name + "'");
    const std::string role = name.substr(2);
    if (std::find(roles.begin(), roles.end(), role) == roles.end()) roles.push_back(role);
  }
  std::vector<std::string> all(names.begin(), names.end());
  for (const std::string& role : roles) {
    for (const char* prefix : {"B-", "I-"}) {
      if (std::find(all.begin(), all.end(), prefix + role) == all.end())
        throw std::invalid_argument("tag list lacks " + (prefix + role));
    }
  }
  return LabelSet(std::move(roles), std::move(all));
}

LabelSet LabelSet::FromCorpus(const Corpus& corpus) {
  const auto inventory = corpus.LabelInventory();
  return LabelSet(std::vector<std::string>(inventory.begin(), inventory.end()));
}

std::optional<int> LabelSet::tag_index(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> LabelSet::role_index(std::string_view role) const {
  auto it = role_by_name_.find(std::string(role));
  if (it == role_by_name_.end()) return std::nullopt;
  return it->second;
}

bool LabelSet::Allows(int previous, int next) const {
  const TagInfo& n = tags_[next];
  if (n.kind != TagKind::kInside) return true;
  const TagInfo& p = tags_[previous];
  return p.kind != TagKind::kOutside && p.role == n.role;
}

bool IsValidSequence(std::span<const int> tags, const LabelSet& labels) {
  for (size_t t = 0; t < tags.size(); ++t) {
    if (tags[t] < 0 || tags[t] >= labels.size()) return false;
    if (t == 0 ? !labels.AllowsFirst(tags[t]) : !labels.Allows(tags[t - 1], tags[t]))
      return false;
  }
  return true;
}

TagSequence SpansToTags(std::span<const ArgumentSpan> spans, int length, const LabelSet& labels) {
  TagSequence tags(length, 0);
  std::vector<int> owner(length, -1);
  for (size_t s = 0; s < spans.size(); ++s) {
    const ArgumentSpan& span = spans[s];
    if (span.start < 0 || span.end < span.start || span.end >= length)
      throw SpanError("span " + ToString(span) + " outside sentence of length " +
                      std::to_string(length));
    const auto role = labels.role_index(span.label);
    if (!role) throw SpanError("span " + ToString(span) + " has a label outside the label set");
    for (int t = span.start; t <= span.end; ++t) {
      if (owner[t] >= 0)
        throw SpanError("overlapping spans " + ToString(spans[owner[t]]) + " and " +
                        ToString(span));
      owner[t] = static_cast<int>(s);
      tags[t] = t == span.start ? labels.begin_tag(*role) : labels.inside_tag(*role);
    }
  }
  return tags;
}

std::vector<ArgumentSpan> TagsToSpans(std::span<const int> tags, const LabelSet& labels,
                                      int* repaired) {
  std::vector<ArgumentSpan> spans;
  int open_role = -1;
  int orphans = 0;
  for (size_t t = 0; t < tags.size(); ++t) {
    const TagInfo& info = labels.info(tags[t]);
    const int position = static_cast<int>(t);
    if (info.kind == TagKind::kInside && info.role == open_role) {
      spans.back().end = position;
      continue;
    }
    if (info.kind == TagKind::kOutside) {
      open_role = -1;
      continue;
    }
    if (info.kind == TagKind::kInside) ++orphans;
    spans.push_back({position, position, labels.roles()[info.role]});
    open_role = info.role;
  }
  if (repaired != nullptr) *repaired = orphans;
  return spans;
}

}  // namespace srl
