#ifndef GAMELAB_RNG_HPP
#define GAMELAB_RNG_HPP

#include <cstdint>
#include <random>

namespace gamelab {

/// Seedable deterministic pseudo-random stream. Distribution mapping is done
/// by hand (not via std::uniform_*_distribution) so that the same seed and
/// call sequence produce identical values on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + next_double() * (hi - lo); }

  /// Uniform index in [0, n). n must be positive.
  std::size_t next_index(std::size_t n) {
    // Rejection sampling to avoid modulo bias.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
  }

  /// Bernoulli draw with success probability p.
  bool next_bool(double p) { return next_double() < p; }

  /// Derive an independent substream; deterministic in (seed, salt).
  Rng split(std::uint64_t salt) const {
    std::mt19937_64 probe = engine_;
    return Rng(probe() ^ (salt * 0x9e3779b97f4a7c15ULL));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gamelab

#endif  // GAMELAB_RNG_HPP
