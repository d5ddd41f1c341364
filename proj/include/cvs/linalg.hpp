#pragma once

#include <Eigen/Dense>

namespace cvs {

/// Cholesky factorization of a symmetric positive-definite matrix, reusable
/// across many right-hand sides (one factorization per block, many solves).
class SpdFactor {
public:
  explicit SpdFactor(const Eigen::MatrixXd& M);

  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
  Eigen::Index dim() const { return llt_.matrixL().rows(); }

private:
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

/// One-shot SPD solve. Throws on asymmetric or non-positive-definite input.
Eigen::VectorXd solve_spd(const Eigen::MatrixXd& M, const Eigen::VectorXd& b);

} // namespace cvs
