#include "cvs/linalg.hpp"

#include "cvs/frame.hpp"

namespace cvs {

SpdFactor::SpdFactor(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw Error("solve_spd: matrix not square");
  const double scale = M.cwiseAbs().maxCoeff();
  if ((M - M.transpose()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + scale))
    throw Error("solve_spd: matrix not symmetric");
  llt_.compute(M);
  if (llt_.info() != Eigen::Success)
    throw Error("solve_spd: factorization failed (matrix not positive-definite)");
}

Eigen::VectorXd SpdFactor::solve(const Eigen::VectorXd& b) const {
  if (b.size() != dim()) throw Error("solve_spd: right-hand side dimension mismatch");
  return llt_.solve(b);
}

Eigen::VectorXd solve_spd(const Eigen::MatrixXd& M, const Eigen::VectorXd& b) {
  return SpdFactor(M).solve(b);
}

} // namespace cvs
