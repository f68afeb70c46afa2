#ifndef SRL_BASELINE_H_
#define SRL_BASELINE_H_

#include <map>
#include <string>
#include <vector>

#include "srl/corpus.h"
#include "srl/emissions.h"
#include "srl/labels.h"

namespace srl {

// Desk-scale stand-in for a trained model. Counts gold tags per key
//   (surface form, is-predicate, signed distance bucket to the predicate)
// with buckets -2, -1, 0, +1, +2 and "far", and emits the add-one smoothed
// distribution. Unseen keys back off to the add-one smoothed global tag
// distribution. Training spans must be disjoint.
class BaselineModel {
 public:
  BaselineModel(const Corpus& train, LabelSet labels);

  EmissionMatrix Emit(const Instance& instance) const;
  const LabelSet& labels() const { return labels_; }

 private:
  static std::string Key(const Instance& instance, int token);

  LabelSet labels_;
  std::map<std::string, std::vector<long>> counts_;
  std::vector<long> global_;
};

// Emissions for every test instance from a model trained on `train`.
EmissionFile BaselineEmissions(const Corpus& train, const Corpus& test, const LabelSet& labels);

}  // namespace srl

#endif  // SRL_BASELINE_H_
