#ifndef SRL_VITERBI_H_
#define SRL_VITERBI_H_

#include <span>
#include <stdexcept>
#include <vector>

#include "srl/emissions.h"
#include "srl/labels.h"

namespace srl {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Decoded {
  TagSequence tags;
  double score = 0;  // sum of the chosen log-probabilities, left to right

  bool operator==(const Decoded&) const = default;
};

// Highest-scoring valid IOB sequence. Transitions are a hard 0/-inf mask:
// I-x may only follow B-x or I-x and never opens the sequence. Among equal
// scores the sequence with the lower tag index at the later position wins,
// comparing from the last token backwards.
//
// Runs in O(T * L): the mask means only I-x needs a restricted argmax, over
// its own B-x and I-x.
//
// An empty matrix decodes to an empty sequence. Throws DecodeError on a
// non-finite score and std::invalid_argument when the column count does
// not match the label set.
Decoded ViterbiDecode(const EmissionMatrix& emissions, const LabelSet& labels);

// Textbook O(T * L^2) Viterbi over the explicit transition mask. Same
// contract and tie-break as ViterbiDecode; kept as the reference it is
// tested against.
Decoded ViterbiDecodeDense(const EmissionMatrix& emissions, const LabelSet& labels);

// Decodes every matrix; results are in input order. The parallel version
// spreads instances over OpenMP threads and is checked against the serial
// one.
std::vector<Decoded> DecodeBatch(std::span<const EmissionMatrix> batch, const LabelSet& labels);
std::vector<Decoded> DecodeBatchSerial(std::span<const EmissionMatrix> batch,
                                       const LabelSet& labels);

}  // namespace srl

#endif  // SRL_VITERBI_H_
