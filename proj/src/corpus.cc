#include "srl/corpus.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace srl {

std::string ToString(const ArgumentSpan& span) {
  return "(" + std::to_string(span.start) + "," + std::to_string(span.end) + "," +
         span.label + ")";
}

bool IsContinuationLabel(std::string_view label) { return label.starts_with("C-"); }
bool IsReferenceLabel(std::string_view label) { return label.starts_with("R-"); }

std::string Instance::id() const {
  return sentence_id + ":" + std::to_string(predicate_index);
}

bool Instance::HasFlag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

bool SplitInstanceId(std::string_view id, std::string* sentence_id, int* predicate_index) {
  const auto colon = id.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == id.size()) return false;
  int index = 0;
  const char* first = id.data() + colon + 1;
  const char* last = id.data() + id.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index < 0) return false;
  *sentence_id = std::string(id.substr(0, colon));
  *predicate_index = index;
  return true;
}

std::set<std::string> Corpus::LabelInventory() const {
  std::set<std::string> labels;
  for (const Instance& instance : instances)
    for (const ArgumentSpan& span : instance.spans) labels.insert(span.label);
  return labels;
}

CorpusSummary Summarize(const Corpus& corpus) {
  CorpusSummary summary;
  std::set<std::string> roles;
  summary.instance_count = static_cast<long>(corpus.instances.size());
  for (const Instance& instance : corpus.instances) {
    for (const ArgumentSpan& span : instance.spans) {
      if (span.label == kVerbLabel || IsContinuationLabel(span.label)) continue;
      ++summary.annotated_arg_count;
      roles.insert(span.label);
    }
  }
  summary.role_count = static_cast<long>(roles.size());
  return summary;
}

void CheckInstance(const Instance& instance) {
  const int n = static_cast<int>(instance.tokens.size());
  for (const std::string& token : instance.tokens) {
    if (token.empty()) throw std::invalid_argument(instance.id() + ": empty token");
    if (token.find_first_of(" \t\r\n") != std::string::npos)
      throw std::invalid_argument(instance.id() + ": token contains whitespace: '" + token + "'");
  }
  if (instance.predicate_index < 0 || instance.predicate_index >= n)
    throw std::invalid_argument(instance.id() + ": predicate index out of range");
  for (const ArgumentSpan& span : instance.spans) {
    if (span.start < 0 || span.end < span.start || span.end >= n)
      throw std::invalid_argument(instance.id() + ": span out of bounds " + ToString(span));
    if (span.label.empty()) throw std::invalid_argument(instance.id() + ": empty span label");
  }
}

}  // namespace srl
