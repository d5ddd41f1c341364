#pragma once

#include <Eigen/Dense>

namespace cvs {

/// Orthonormal 2D DCT for L×L blocks, held in explicit matrix form.
/// forward analyzes (pixels -> coefficients), inverse synthesizes.
/// The matrix form is what the solvers need anyway (B = forward * H),
/// and n = L^2 stays small, so no fast transform.
struct DctBasis {
  int L = 0;
  Eigen::MatrixXd forward; // n×n, orthonormal, forward.transpose() == inverse
  Eigen::MatrixXd inverse;

  static DctBasis make(int L);
};

Eigen::VectorXd dct2_forward(const Eigen::VectorXd& vec, const DctBasis& basis);
Eigen::VectorXd dct2_inverse(const Eigen::VectorXd& coeffs, const DctBasis& basis);

} // namespace cvs
