#ifndef SRL_SYNTHETIC_H_
#define SRL_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "srl/corpus.h"

namespace srl {

// Generated corpora for tests, benchmarks and demos. Output depends only on
// the options (SplitMix64 underneath).

struct SyntheticOptions {
  int sentences = 100;
  uint64_t seed = 1;
  // Probability that a sentence gets a second, coordinated predicate.
  double second_predicate = 0.3;
};

// Newswire-like Portuguese sentences built from role templates (A0, V, A1,
// A2, AM-TMP, AM-LOC, AM-NEG, AM-MNR, R-A0, C-A1). Surface cues correlate
// with roles, so a frequency model can learn something.
Corpus SyntheticCorpus(const SyntheticOptions& options);

// The 26 role labels, most frequent first.
const std::vector<std::string>& PropBankLikeRoles();

// Instances whose label sets follow a Zipf law over PropBankLikeRoles():
// each instance draws 1 to max_labels distinct labels with probability
// proportional to rank^-exponent. Every argument is a single token.
Corpus ZipfianLabelCorpus(int instances, double exponent, int max_labels, uint64_t seed);

}  // namespace srl

#endif  // SRL_SYNTHETIC_H_
