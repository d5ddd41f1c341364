#include "cvs/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace cvs {

int DisplacementSet::window_radius() const {
  int r = 0;
  for (const auto& [dy, dx] : offsets) r = std::max({r, std::abs(dy), std::abs(dx)});
  return r;
}

DisplacementSet displacement_set(int p) {
  if (p < 1) throw Error("displacement_set: p must be at least 1");
  int k = 0;
  while ((2 * k + 1) * (2 * k + 1) < p) ++k;

  // pair representatives (dy > 0, or dy == 0 && dx > 0), nearest-first with
  // ties broken by smaller |dy| then |dx|
  std::vector<std::pair<int, int>> reps;
  for (int dy = 0; dy <= k; ++dy)
    for (int dx = (dy == 0 ? 1 : -k); dx <= k; ++dx)
      reps.emplace_back(dy, dx);
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    const auto key = [](const std::pair<int, int>& o) {
      return std::make_tuple(o.first * o.first + o.second * o.second, std::abs(o.first),
                             std::abs(o.second), o.first, o.second);
    };
    return key(a) < key(b);
  });

  DisplacementSet set;
  set.offsets.emplace_back(0, 0);
  for (const auto& [dy, dx] : reps) {
    if (set.p() >= p) break;
    set.offsets.emplace_back(dy, dx);
    if (set.p() < p) set.offsets.emplace_back(-dy, -dx); // may split the last pair
  }
  std::sort(set.offsets.begin(), set.offsets.end());
  return set;
}

DisplacementSet displacement_set(int p, int window_radius) {
  const long capacity = static_cast<long>(2 * window_radius + 1) * (2 * window_radius + 1);
  if (p > capacity)
    throw Error("displacement_set: p = " + std::to_string(p) + " exceeds the " +
                std::to_string(capacity) + " offsets of a radius-" +
                std::to_string(window_radius) + " window");
  return displacement_set(p);
}

Eigen::VectorXd tikhonov_weights(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                 const Eigen::MatrixXd& H) {
  if (H.rows() != phi.n || y.size() != phi.m) throw Error("tikhonov_weights: shape mismatch");
  Eigen::VectorXd gamma(H.cols());
  for (Eigen::Index j = 0; j < H.cols(); ++j)
    gamma[j] = (y - phi.entries * H.col(j)).norm();
  return gamma;
}

static int clamp_int(int v, int lo, int hi) { return std::max(lo, std::min(v, hi)); }

HypothesisSet build_hypotheses(int block_row, int block_col,
                               const std::vector<const Frame*>& references,
                               const DisplacementSet& disp, const MeasurementMatrix& phi,
                               const DctBasis& dct, const Eigen::VectorXd& y) {
  if (references.empty() || references.size() > 2)
    throw Error("build_hypotheses: expected 1 or 2 reference frames");
  if (y.size() != phi.m) throw Error("build_hypotheses: y length does not match phi.m");
  const int L = dct.L;
  const int n = L * L;
  if (phi.n != n) throw Error("build_hypotheses: phi.n does not match block size");
  const int p = disp.p();

  HypothesisSet hyp;
  hyp.H.resize(n, p);
  for (int j = 0; j < p; ++j) {
    int ref_idx = 0;
    int disp_idx = j;
    if (references.size() == 2) {
      if (p % 2 == 0) {
        ref_idx = j < p / 2 ? 0 : 1;
        disp_idx = j % (p / 2);
      } else {
        ref_idx = j % 2;
        disp_idx = j / 2;
      }
    }
    const Frame& ref = *references[ref_idx];
    const auto& [dy, dx] = disp.offsets[disp_idx];
    const int r = clamp_int(block_row + dy, 0, ref.height - L);
    const int c = clamp_int(block_col + dx, 0, ref.width - L);
    hyp.H.col(j) = vectorize_block(ref, r, c, L).data;
  }
  hyp.A = phi.entries * hyp.H;
  hyp.B = dct.forward * hyp.H;
  hyp.gamma.resize(p);
  for (int j = 0; j < p; ++j) hyp.gamma[j] = (y - hyp.A.col(j)).norm();
  hyp.y = y;
  return hyp;
}

} // namespace cvs
