// Counter-based random number generator. Every draw is a pure function of
// (seed, stream, counter), so sample i of stream s is the same no matter in
// which order streams are consumed. This is what makes parallel Monte-Carlo
// runs and re-runs byte-for-byte reproducible.
#pragma once

#include <cstdint>
#include <cmath>

namespace prcurve {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(mix64(seed + kGolden) ^ mix64(stream ^ 0x5851F42D4C957F2Dull))),
        counter_(0) {}

  std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGolden); }

  // [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1]; safe as a log() argument.
  double uniform_pos() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; the pair's second draw is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

  // Uniform in {0, ..., n-1}. Modulo bias is < 2^-53 for any n we use.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace prcurve
