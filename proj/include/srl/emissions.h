#ifndef SRL_EMISSIONS_H_
#define SRL_EMISSIONS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "srl/labels.h"

namespace srl {

// Tokens x tags matrix of natural-log probabilities for one instance. This
// is the boundary between any model and the decoder.
class EmissionMatrix {
 public:
  EmissionMatrix() = default;
  EmissionMatrix(std::string instance_id, int num_tokens, int num_tags)
      : instance_id_(std::move(instance_id)),
        num_tokens_(num_tokens),
        num_tags_(num_tags),
        scores_(static_cast<size_t>(num_tokens) * num_tags, 0.0) {}

  const std::string& instance_id() const { return instance_id_; }
  int num_tokens() const { return num_tokens_; }
  int num_tags() const { return num_tags_; }

  double at(int token, int tag) const { return scores_[Offset(token, tag)]; }
  double& at(int token, int tag) { return scores_[Offset(token, tag)]; }
  std::span<const double> row(int token) const {
    return {scores_.data() + Offset(token, 0), static_cast<size_t>(num_tags_)};
  }
  std::span<double> row(int token) {
    return {scores_.data() + Offset(token, 0), static_cast<size_t>(num_tags_)};
  }
  std::span<const double> scores() const { return scores_; }

  bool operator==(const EmissionMatrix&) const = default;

 private:
  size_t Offset(int token, int tag) const {
    return static_cast<size_t>(token) * num_tags_ + tag;
  }

  std::string instance_id_;
  int num_tokens_ = 0;
  int num_tags_ = 0;
  std::vector<double> scores_;
};

struct EmissionFile {
  LabelSet labels;
  std::vector<EmissionMatrix> instances;

  bool operator==(const EmissionFile&) const = default;
};

// Format:
//   #labels<TAB>O<TAB>B-A0<TAB>...
//   #instance<TAB><id><TAB><T>
//   T lines of L tab-separated decimals
//   <blank line>
//   #instance ...
// Throws ParseError on structural problems or unparsable numbers.
EmissionFile ReadEmissions(std::istream& in);
// Numbers are written in shortest round-trip form.
void WriteEmissions(std::ostream& out, const EmissionFile& file);

// Format checker. Returns one message per problem: non-finite entries and
// rows whose exponentials do not sum to 1 within `tolerance`.
std::vector<std::string> CheckEmissions(const EmissionFile& file, double tolerance = 1e-4);

// One-hot log-probabilities on the given tags: log(1 - eps) on the tag and
// log(eps / (L - 1)) elsewhere.
EmissionMatrix OneHotEmissions(std::string instance_id, std::span<const int> tags,
                               int num_tags, double eps = 1e-6);
// Every entry log(1 / L).
EmissionMatrix UniformEmissions(std::string instance_id, int num_tokens, int num_tags);

}  // namespace srl

#endif  // SRL_EMISSIONS_H_
