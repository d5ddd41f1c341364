#pragma once

#include <cstdint>

namespace cvs {

// splitmix64 stream generator. Chosen over std::mt19937 +
// std::normal_distribution because the standard distributions are not
// bit-reproducible across library implementations; this one is fully
// specified here and in the README.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in (0,1); never returns 0, so log() below is safe
  double next_unit() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // standard normal via Box-Muller (one draw per call, no caching so the
  // stream position is a pure function of the call count)
  double next_gaussian();

private:
  std::uint64_t state_;
};

// mixes a secondary key into a seed to derive independent streams
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key);

} // namespace cvs
