#include "frechet/rng.hpp"

#include <cmath>
#include <numbers>

#include "frechet/error.hpp"

namespace frechet {

double Rng::normal() {
  // No spare value is cached: two uniforms in, one normal out, so the
  // stream position is a pure function of the call count.
  double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::index(std::uint64_t bound) {
  if (bound == 0) throw Error(errc::bad_parameter, "index bound must be positive");
  // Reject the low 2^64 mod bound values so the modulo is unbiased.
  std::uint64_t lim = -bound % bound;
  std::uint64_t r = next_u64();
  while (r < lim) r = next_u64();
  return r % bound;
}

}  // namespace frechet
