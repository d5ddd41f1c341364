#include "cvs/rng.hpp"

#include <cmath>

namespace cvs {

double SplitMix64::next_gaussian() {
  const double u1 = next_unit();
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key) {
  SplitMix64 g(seed ^ (key * 0xff51afd7ed558ccdULL + 0x2545f4914f6cdd1dULL));
  return g.next();
}

} // namespace cvs
