#pragma once

#include <cstdint>
#include <string_view>

namespace accentmask {

/// Counter-based pseudo-random generator (splitmix64 finalizer applied to
/// key + counter). The i-th output is a pure function of (seed, stream, i),
/// so draws can be addressed randomly and independent streams can be derived
/// per utterance / epoch / batch without sharing state between threads.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed + 0x9E3779B97F4A7C15ULL) ^ mix(stream + 0x632BE59BD9B4E019ULL)) {}

  /// Raw 64-bit draw at an absolute counter position (stateless).
  std::uint64_t at(std::uint64_t counter) const {
    return mix(key_ + (counter + 1) * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform double in [0, 1) at an absolute counter position.
  double uniform_at(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t next() { return at(counter_++); }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// Standard normal draw (Box-Muller; consumes two counters).
  double normal();

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// FNV-1a hash of a label, used to name streams.
  static std::uint64_t label(std::string_view s);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Documented seed-derivation scheme: every seeded component of the pipeline
/// draws from CounterRng(derive_seed(global_seed, label, a, b)). The labels
/// in use are listed with the functions that consume them.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label,
                          std::uint64_t a = 0, std::uint64_t b = 0);

}  // namespace accentmask
