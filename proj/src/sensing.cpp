#include "cvs/sensing.hpp"

#include "cvs/frame.hpp"
#include "cvs/rng.hpp"

#include <cmath>

namespace cvs {

MeasurementMatrix gaussian_matrix(std::uint64_t seed, int m, int n) {
  if (m <= 0 || n <= 0) throw Error("gaussian_matrix: m and n must be positive");
  if (m > n) throw Error("gaussian_matrix: m > n gives a sampling rate above 1");
  MeasurementMatrix phi;
  phi.m = m;
  phi.n = n;
  phi.seed = seed;
  phi.rate = static_cast<double>(m) / n;
  phi.entries.resize(m, n);
  SplitMix64 rng(seed);
  const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
  // row-major fill order is part of the reproducibility contract
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c)
      phi.entries(r, c) = sigma * rng.next_gaussian();
  return phi;
}

MeasurementMatrix identity_matrix(int n) {
  MeasurementMatrix phi;
  phi.m = n;
  phi.n = n;
  phi.seed = 0;
  phi.rate = 1.0;
  phi.entries = Eigen::MatrixXd::Identity(n, n);
  return phi;
}

int measurement_count(double rate, int n) {
  int m = static_cast<int>(std::lround(rate * n));
  if (m < 1) m = 1;
  if (m > n) m = n;
  return m;
}

} // namespace cvs
