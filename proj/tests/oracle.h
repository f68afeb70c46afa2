#ifndef SRL_TESTS_ORACLE_H_
#define SRL_TESTS_ORACLE_H_

// Reference implementations used by the tests. They share no code with the
// library beyond the data types.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "srl/emissions.h"
#include "srl/labels.h"
#include "srl/rng.h"

namespace srl::oracle {

// IOB validity from the tag names alone.
inline bool ValidByName(const std::vector<int>& tags, const std::vector<std::string>& names) {
  for (size_t t = 0; t < tags.size(); ++t) {
    const std::string& name = names[tags[t]];
    if (name.rfind("I-", 0) != 0) continue;
    if (t == 0) return false;
    const std::string& previous = names[tags[t - 1]];
    const std::string role = name.substr(2);
    if (previous != "B-" + role && previous != "I-" + role) return false;
  }
  return true;
}

// True when `a` should win a score tie against `b`: compared from the last
// token backwards, the first differing position has the lower tag in `a`.
inline bool WinsTie(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

struct Best {
  std::vector<int> tags;
  double score = -std::numeric_limits<double>::infinity();
  long valid_sequences = 0;
};

// Enumerates all L^T sequences. Scores are summed left to right, the same
// order the decoders accumulate in, so equal sequences give equal doubles.
inline Best BruteForce(const EmissionMatrix& m, const std::vector<std::string>& names) {
  const int T = m.num_tokens();
  const int L = m.num_tags();
  Best best;
  std::vector<int> seq(T, 0);
  while (true) {
    if (ValidByName(seq, names)) {
      ++best.valid_sequences;
      double score = 0;
      for (int t = 0; t < T; ++t) score += m.at(t, seq[t]);
      const bool first = best.valid_sequences == 1;
      if (first || score > best.score || (score == best.score && WinsTie(seq, best.tags))) {
        best.tags = seq;
        best.score = score;
      }
    }
    int t = 0;
    while (t < T && ++seq[t] == L) seq[t++] = 0;
    if (t == T) break;
  }
  return best;
}

// Log-softmax rows of random logits. With `coarse`, logits come from a
// small integer grid so that exact score ties are common.
inline EmissionMatrix RandomEmissions(SplitMix64& rng, int T, int L, bool coarse,
                                      const std::string& id = "1:0") {
  EmissionMatrix m(id, T, L);
  for (int t = 0; t < T; ++t) {
    std::vector<double> logits(L);
    for (double& x : logits)
      x = coarse ? static_cast<double>(rng.Below(3)) : 6.0 * rng.Uniform() - 3.0;
    if (coarse) {
      // Raw grid values keep ties exact; they need not be normalized.
      for (int j = 0; j < L; ++j) m.at(t, j) = -logits[j];
      continue;
    }
    double max = logits[0];
    for (double x : logits) max = std::max(max, x);
    double sum = 0;
    for (double x : logits) sum += std::exp(x - max);
    const double log_z = max + std::log(sum);
    for (int j = 0; j < L; ++j) m.at(t, j) = logits[j] - log_z;
  }
  return m;
}

// Label set with `roles` roles, so L = 2 * roles + 1.
inline LabelSet RolesFor(int tag_count) {
  std::vector<std::string> roles;
  for (int r = 0; r < (tag_count - 1) / 2; ++r) roles.push_back("R" + std::to_string(r));
  return LabelSet(roles);
}

}  // namespace srl::oracle

#endif  // SRL_TESTS_ORACLE_H_
