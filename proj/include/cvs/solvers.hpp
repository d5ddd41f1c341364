#pragma once

#include "cvs/hypothesis.hpp"
#include "cvs/linalg.hpp"
#include "cvs/sensing.hpp"
#include "cvs/transform.hpp"

#include <vector>

namespace cvs {

struct SolverConfig {
  double lambda1 = 1.0;    // Tikhonov weight
  double lambda2 = 1000.0; // sparsity weight
  double rho = 0.01;       // augmented-Lagrangian penalty
  int k_max = 10;

  void validate() const;
};

struct AdmmState {
  Eigen::VectorXd x;     // DCT-domain auxiliary, constrained to B*omega
  Eigen::VectorXd omega; // hypothesis coefficients
  Eigen::VectorXd z;     // scaled dual
  int iteration = 0;

  static AdmmState zeros(int n, int p);
};

struct MhStResult {
  Eigen::VectorXd omega;
  Eigen::VectorXd x_block; // H * omega, pixel domain
  std::vector<double> cost_trace;            // sparsity+Tikhonov cost per iteration
  std::vector<double> primal_residual_trace; // ||x - B*omega|| per iteration
};

/// Elementwise shrinkage, the prox of alpha*|.|: zero inside [-alpha, alpha],
/// magnitudes reduced by alpha outside.
double soft_threshold(double v, double alpha);
Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double alpha);

Eigen::VectorXd admm_x_update(const AdmmState& state, const Eigen::MatrixXd& B,
                              const SolverConfig& cfg);
Eigen::VectorXd admm_omega_update(const AdmmState& state, const HypothesisSet& hyp,
                                  const SolverConfig& cfg, const SpdFactor& C_factor);
Eigen::VectorXd admm_dual_update(const AdmmState& state, const Eigen::MatrixXd& B, double rho);

/// ||y - A w||^2 + lambda1 ||Gamma w||^2 + lambda2 ||B w||_1
double mh_st_cost(const Eigen::VectorXd& omega, const HypothesisSet& hyp,
                  const SolverConfig& cfg);

/// C = 2 A^T A + 2 lambda1 Gamma^2 + rho B^T B, factorized once per block.
/// Retries once with a 1e-10 diagonal bump if the factorization fails.
SpdFactor mh_st_normal_matrix(const HypothesisSet& hyp, const SolverConfig& cfg);

/// ADMM over the sparsity + Tikhonov cost, zero-initialized, fixed iteration
/// count; returns the final coefficients and H*omega.
MhStResult mh_st_solve(const Eigen::VectorXd& y, const HypothesisSet& hyp,
                       const SolverConfig& cfg);

/// Closed-form baseline: omega = (A^T A + lambda Gamma^2)^{-1} A^T y.
Eigen::VectorXd mh_tikhonov_solve(const Eigen::VectorXd& y, const HypothesisSet& hyp,
                                  double lambda);

struct SplParams {
  int iters = 50;
  double tau0 = 10.0;  // initial DCT threshold
  double tau_decay = 0.7;
  double clamp_lo = 0.0; // final clamp range; widen for residual recovery
  double clamp_hi = 255.0;

  std::vector<double> schedule() const;
};

/// Landweber iterations with DCT-domain soft thresholding; the block
/// recovery used for reference frames and residuals.
Eigen::VectorXd spl_lite_recover(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                 const DctBasis& dct, const SplParams& params);

/// Variant taking an explicit threshold schedule (length = iteration count).
Eigen::VectorXd spl_lite_recover(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                 const DctBasis& dct, const std::vector<double>& tau_schedule,
                                 double clamp_lo, double clamp_hi);

} // namespace cvs
