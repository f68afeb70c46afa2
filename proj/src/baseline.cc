#include "srl/baseline.h"

#include <cmath>
#include <numeric>

namespace srl {

BaselineModel::BaselineModel(const Corpus& train, LabelSet labels)
    : labels_(std::move(labels)), global_(labels_.size(), 0) {
  for (const Instance& instance : train.instances) {
    const int n = static_cast<int>(instance.tokens.size());
    const TagSequence tags = SpansToTags(instance.spans, n, labels_);
    for (int t = 0; t < n; ++t) {
      auto& row = counts_[Key(instance, t)];
      if (row.empty()) row.assign(labels_.size(), 0);
      ++row[tags[t]];
      ++global_[tags[t]];
    }
  }
}

std::string BaselineModel::Key(const Instance& instance, int token) {
  const int distance = token - instance.predicate_index;
  const std::string bucket = distance < -2 || distance > 2 ? "far" : std::to_string(distance);
  return instance.tokens[token] + '\x1f' + (distance == 0 ? "P" : "-") + '\x1f' + bucket;
}

EmissionMatrix BaselineModel::Emit(const Instance& instance) const {
  const int n = static_cast<int>(instance.tokens.size());
  const int num_tags = labels_.size();
  EmissionMatrix matrix(instance.id(), n, num_tags);
  for (int t = 0; t < n; ++t) {
    auto it = counts_.find(Key(instance, t));
    const std::vector<long>& counts = it == counts_.end() ? global_ : it->second;
    const long total = std::accumulate(counts.begin(), counts.end(), 0L);
    const double log_denominator = std::log(static_cast<double>(total + num_tags));
    for (int j = 0; j < num_tags; ++j)
      matrix.at(t, j) = std::log(static_cast<double>(counts[j] + 1)) - log_denominator;
  }
  return matrix;
}

EmissionFile BaselineEmissions(const Corpus& train, const Corpus& test, const LabelSet& labels) {
  const BaselineModel model(train, labels);
  EmissionFile file;
  file.labels = labels;
  file.instances.reserve(test.instances.size());
  for (const Instance& instance : test.instances) file.instances.push_back(model.Emit(instance));
  return file;
}

}  // namespace srl
