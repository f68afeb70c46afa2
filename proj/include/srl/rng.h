#ifndef SRL_RNG_H_
#define SRL_RNG_H_

#include <cstdint>

namespace srl {

// SplitMix64 (Steele, Lea & Flood). The output sequence is fully specified
// by the seed, so fold files and synthetic fixtures are identical on every
// platform. Documented in docs/formats.md.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound). Uses rejection so the result is unbiased.
  uint64_t Below(uint64_t bound);

  // Uniform double in [0, 1) built from the top 53 bits.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace srl

#endif  // SRL_RNG_H_
