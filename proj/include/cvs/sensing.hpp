#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace cvs {

/// Gaussian sensing operator shared by all blocks sampled at one rate.
/// Entries ~ N(0, 1/m) so that ||Phi x|| ~ ||x|| in expectation, keeping the
/// solver weights comparable across rates. Regenerable bit-exact from
/// (seed, m, n).
struct MeasurementMatrix {
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  double rate = 0.0; // m/n
  Eigen::MatrixXd entries;
};

MeasurementMatrix gaussian_matrix(std::uint64_t seed, int m, int n);

/// n×n identity operator, the rate-1.0 test mode.
MeasurementMatrix identity_matrix(int n);

/// m = round(rate*n), clamped to at least 1.
int measurement_count(double rate, int n);

} // namespace cvs
