#pragma once

#include <cstdint>
#include <random>

namespace frechet {

/// splitmix64 finalizer; used for seed derivation, not for sampling.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Sub-seed roles for the counter-based seed split. A master seed fans out to
/// per-(n, seed, role) streams; adding grid points or roles never perturbs
/// streams already in use.
enum class SeedRole : std::uint64_t {
  data = 1,
  mc = 2,
  split = 3,
  nuclei = 4,
  prototypes = 5,
  trial = 6,
  pool = 7,
  learn = 8,
};

inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b,
                              SeedRole role) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ static_cast<std::uint64_t>(role));
  return h;
}

/// Deterministic random stream. All transforms are implemented explicitly
/// (no std::*_distribution) so that identical seeds give bit-identical
/// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal();

  /// Unbiased integer in [0, bound) by rejection.
  std::uint64_t index(std::uint64_t bound);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace frechet
