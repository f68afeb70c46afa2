#ifndef SRL_STRATIFY_H_
#define SRL_STRATIFY_H_

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "srl/corpus.h"

namespace srl {

struct StratifyOptions {
  // Stratify on C-x and R-x labels too. V is never used.
  bool include_continuation_and_reference = true;
};

// Stratification labels of an instance: the set of its span labels.
std::set<std::string> StratificationLabels(const Instance& instance,
                                           const StratifyOptions& options = {});

// Fold index per instance, in corpus order.
struct FoldAssignment {
  int k = 0;
  uint64_t seed = 0;
  std::vector<std::string> instance_ids;
  std::vector<int> fold;

  std::vector<int> FoldSizes() const;
  bool operator==(const FoldAssignment&) const = default;
};

// Iterative stratification over arbitrary target sizes (which must sum to
// the number of instances):
//
//   1. Demand of fold j for label l starts at count(l) * size_j / N.
//   2. While labeled instances remain, take the label with the fewest
//      remaining instances (ties: label name). Give each of its instances,
//      in corpus order, to the open fold with the highest demand for it;
//      ties go to the most remaining capacity, then to a seeded draw.
//      Demands and capacity of the chosen fold drop for every label the
//      instance carries.
//   3. Instances without labels go round-robin over the open folds.
//
// A fold is open while it holds fewer than its target size, so sizes come
// out exact. Deterministic in (corpus, targets, seed).
std::vector<int> IterativeStratify(const std::vector<std::set<std::string>>& labels,
                                   const std::vector<int>& target_sizes, uint64_t seed);

// k folds whose sizes differ by at most one (the first N mod k folds get
// the extra instance). Throws std::invalid_argument if k < 2 or k > N.
FoldAssignment StratifiedFolds(const Corpus& corpus, int k, uint64_t seed,
                               const StratifyOptions& options = {});

// Splits off a validation set of exactly target_size instances with the
// same routine run on two folds. Throws std::invalid_argument unless
// 0 <= target_size < N.
void CarveValidation(const Corpus& train, int target_size, uint64_t seed, Corpus* rest,
                     Corpus* validation, const StratifyOptions& options = {});

// Instances of one fold (or of every other fold when `complement`).
Corpus SelectFold(const Corpus& corpus, const FoldAssignment& folds, int fold,
                  bool complement = false);

// "k<TAB>10", "seed<TAB>42", then "<instance id><TAB><fold>" per instance.
void WriteManifest(std::ostream& out, const FoldAssignment& folds);
FoldAssignment ReadManifest(std::istream& in);

}  // namespace srl

#endif  // SRL_STRATIFY_H_
