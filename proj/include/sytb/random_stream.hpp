#pragma once

#include <cstdint>
#include <random>

namespace sytb {

// A reproducible random source identified by (seed, stream index).
//
// Stream derivation: the engine is std::mt19937_64 seeded through
// std::seed_seq{seed_lo, seed_hi, stream_lo, stream_hi} (32-bit halves).
// Bounded draws use Lemire's multiply-shift rejection so results do not
// depend on the standard library's distribution implementation.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 0;

}  // namespace sytb
