#pragma once

#include <cstdint>
#include <string_view>

namespace dclr {

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// bit-identical across platforms and standard libraries. Every randomized
// stage derives its stream functionally from (seed, purpose, ids...) instead
// of consuming a shared sequential state, which is what makes checkpoints
// resumable and runs replayable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);
  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n);
  // Standard normal via Box-Muller (no cached spare; stateless streams win
  // over saving one transcendental).
  double normal();
  double normal(double mean, double stddev);
  bool bernoulli(double p);

  // Deterministic child stream addressed by a tag and up to three indices.
  Rng stream(std::string_view tag, std::uint64_t a = 0, std::uint64_t b = 0,
             std::uint64_t c = 0) const;

 private:
  std::uint64_t s_[4];
};

}  // namespace dclr
