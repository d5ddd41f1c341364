#include "cvs/transform.hpp"

#include "cvs/frame.hpp"

#include <cmath>

namespace cvs {

// 1D orthonormal DCT-II matrix of size L
static Eigen::MatrixXd dct1d(int L) {
  Eigen::MatrixXd D(L, L);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < L; ++k) {
    const double scale = (k == 0) ? std::sqrt(1.0 / L) : std::sqrt(2.0 / L);
    for (int i = 0; i < L; ++i)
      D(k, i) = scale * std::cos(pi * (2 * i + 1) * k / (2.0 * L));
  }
  return D;
}

DctBasis DctBasis::make(int L) {
  if (L <= 0) throw Error("DCT block edge must be positive");
  DctBasis b;
  b.L = L;
  const Eigen::MatrixXd D = dct1d(L);
  const int n = L * L;
  // separable 2D transform on row-wise vectorized blocks: kron(D, D)
  b.forward.resize(n, n);
  for (int kr = 0; kr < L; ++kr)
    for (int kc = 0; kc < L; ++kc)
      for (int r = 0; r < L; ++r)
        for (int c = 0; c < L; ++c)
          b.forward(kr * L + kc, r * L + c) = D(kr, r) * D(kc, c);
  b.inverse = b.forward.transpose();
  return b;
}

Eigen::VectorXd dct2_forward(const Eigen::VectorXd& vec, const DctBasis& basis) {
  if (vec.size() != basis.forward.cols()) throw Error("dct2_forward: dimension mismatch");
  return basis.forward * vec;
}

Eigen::VectorXd dct2_inverse(const Eigen::VectorXd& coeffs, const DctBasis& basis) {
  if (coeffs.size() != basis.inverse.cols()) throw Error("dct2_inverse: dimension mismatch");
  return basis.inverse * coeffs;
}

} // namespace cvs
