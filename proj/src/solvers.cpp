#include "cvs/solvers.hpp"

#include "cvs/rng.hpp"

#include <cmath>

namespace cvs {

void SolverConfig::validate() const {
  if (lambda1 <= 0 || lambda2 <= 0 || rho <= 0 || k_max < 1)
    throw Error("SolverConfig: lambda1, lambda2, rho must be positive and k_max >= 1");
}

AdmmState AdmmState::zeros(int n, int p) {
  AdmmState s;
  s.x = Eigen::VectorXd::Zero(n);
  s.omega = Eigen::VectorXd::Zero(p);
  s.z = Eigen::VectorXd::Zero(n);
  return s;
}

double soft_threshold(double v, double alpha) {
  if (v > alpha) return v - alpha;
  if (v < -alpha) return v + alpha;
  return 0.0;
}

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double alpha) {
  if (alpha < 0) throw Error("soft_threshold: alpha must be non-negative");
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = soft_threshold(v[i], alpha);
  return out;
}

Eigen::VectorXd admm_x_update(const AdmmState& state, const Eigen::MatrixXd& B,
                              const SolverConfig& cfg) {
  // (lambda2/rho) * S_1((rho*B*omega - z)/lambda2), identically
  // S_{lambda2/rho}(B*omega - z/rho)
  const Eigen::VectorXd arg = (cfg.rho * (B * state.omega) - state.z) / cfg.lambda2;
  return (cfg.lambda2 / cfg.rho) * soft_threshold(arg, 1.0);
}

Eigen::VectorXd admm_omega_update(const AdmmState& state, const HypothesisSet& hyp,
                                  const SolverConfig& cfg, const SpdFactor& C_factor) {
  const Eigen::VectorXd rhs =
      hyp.B.transpose() * (state.z + cfg.rho * state.x) + 2.0 * hyp.A.transpose() * hyp.y;
  return C_factor.solve(rhs);
}

Eigen::VectorXd admm_dual_update(const AdmmState& state, const Eigen::MatrixXd& B, double rho) {
  return state.z + rho * (state.x - B * state.omega);
}

double mh_st_cost(const Eigen::VectorXd& omega, const HypothesisSet& hyp,
                  const SolverConfig& cfg) {
  const double fidelity = (hyp.y - hyp.A * omega).squaredNorm();
  const double tikhonov = (hyp.gamma.asDiagonal() * omega).squaredNorm();
  const double sparsity = (hyp.B * omega).lpNorm<1>();
  return fidelity + cfg.lambda1 * tikhonov + cfg.lambda2 * sparsity;
}

SpdFactor mh_st_normal_matrix(const HypothesisSet& hyp, const SolverConfig& cfg) {
  Eigen::MatrixXd C = 2.0 * hyp.A.transpose() * hyp.A + cfg.rho * hyp.B.transpose() * hyp.B;
  C.diagonal() += 2.0 * cfg.lambda1 * hyp.gamma.array().square().matrix();
  C = 0.5 * (C + C.transpose()); // kill rounding asymmetry before LLT
  try {
    return SpdFactor(C);
  } catch (const Error&) {
    // duplicate hypothesis columns (clamped border windows) make C singular;
    // the bump must sit above the factorization's roundoff at matrix scale
    C.diagonal().array() += 1e-10 * std::max(1.0, C.diagonal().maxCoeff());
    return SpdFactor(C); // second failure propagates
  }
}

MhStResult mh_st_solve(const Eigen::VectorXd& y, const HypothesisSet& hyp,
                       const SolverConfig& cfg) {
  cfg.validate();
  if (y.size() != hyp.y.size() || (y - hyp.y).norm() != 0.0)
    throw Error("mh_st_solve: y does not match the hypothesis set");
  const int n = static_cast<int>(hyp.H.rows());
  const int p = static_cast<int>(hyp.H.cols());

  const SpdFactor C = mh_st_normal_matrix(hyp, cfg);
  AdmmState state = AdmmState::zeros(n, p);
  MhStResult result;
  result.cost_trace.reserve(cfg.k_max);
  result.primal_residual_trace.reserve(cfg.k_max);

  for (int k = 0; k < cfg.k_max; ++k) {
    state.x = admm_x_update(state, hyp.B, cfg);
    state.omega = admm_omega_update(state, hyp, cfg, C);
    state.z = admm_dual_update(state, hyp.B, cfg.rho);
    state.iteration = k + 1;
    result.cost_trace.push_back(mh_st_cost(state.omega, hyp, cfg));
    result.primal_residual_trace.push_back((state.x - hyp.B * state.omega).norm());
  }

  result.omega = state.omega;
  result.x_block = hyp.H * result.omega;
  return result;
}

Eigen::VectorXd mh_tikhonov_solve(const Eigen::VectorXd& y, const HypothesisSet& hyp,
                                  double lambda) {
  if (lambda <= 0) throw Error("mh_tikhonov_solve: lambda must be positive");
  Eigen::MatrixXd M = hyp.A.transpose() * hyp.A;
  M.diagonal() += lambda * hyp.gamma.array().square().matrix();
  M = 0.5 * (M + M.transpose());
  const Eigen::VectorXd rhs = hyp.A.transpose() * y;
  Eigen::VectorXd omega;
  try {
    omega = SpdFactor(M).solve(rhs);
  } catch (const Error&) {
    M.diagonal().array() += 1e-10 * std::max(1.0, M.diagonal().maxCoeff());
    omega = SpdFactor(M).solve(rhs);
  }
  return hyp.H * omega;
}

std::vector<double> SplParams::schedule() const {
  std::vector<double> taus(iters);
  double tau = tau0;
  for (int i = 0; i < iters; ++i) {
    taus[i] = tau;
    tau *= tau_decay;
  }
  return taus;
}

Eigen::VectorXd spl_lite_recover(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                 const DctBasis& dct, const SplParams& params) {
  return spl_lite_recover(y, phi, dct, params.schedule(), params.clamp_lo, params.clamp_hi);
}

// largest-eigenvalue estimate of Phi^T Phi by power iteration, fixed-seed
// start vector so the step size is reproducible
static double spectral_bound(const MeasurementMatrix& phi) {
  SplitMix64 rng(0x5b1eedc0de5eedULL);
  Eigen::VectorXd v(phi.n);
  for (int i = 0; i < phi.n; ++i) v[i] = rng.next_gaussian();
  v.normalize();
  double ev = 1.0;
  for (int it = 0; it < 20; ++it) {
    Eigen::VectorXd w = phi.entries.transpose() * (phi.entries * v);
    ev = w.norm();
    if (ev == 0.0) return 1.0;
    v = w / ev;
  }
  return ev;
}

Eigen::VectorXd spl_lite_recover(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                 const DctBasis& dct, const std::vector<double>& tau_schedule,
                                 double clamp_lo, double clamp_hi) {
  if (phi.m > phi.n) throw Error("spl_lite_recover: phi.m must not exceed phi.n");
  if (y.size() != phi.m) throw Error("spl_lite_recover: y length does not match phi.m");
  const double step = 1.0 / spectral_bound(phi);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(phi.n);
  for (double tau : tau_schedule) {
    x += step * (phi.entries.transpose() * (y - phi.entries * x));
    Eigen::VectorXd coeffs = dct.forward * x;
    if (tau > 0.0) coeffs = soft_threshold(coeffs, tau);
    x = dct.inverse * coeffs;
  }
  return x.cwiseMax(clamp_lo).cwiseMin(clamp_hi);
}

} // namespace cvs
