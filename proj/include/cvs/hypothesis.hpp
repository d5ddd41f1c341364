#pragma once

#include "cvs/frame.hpp"
#include "cvs/sensing.hpp"
#include "cvs/transform.hpp"

#include <utility>
#include <vector>

namespace cvs {

/// Integer pixel displacements tried when gathering candidate blocks.
/// (0,0) always present; offsets come in +/- pairs except when the requested
/// count has the wrong parity, in which case exactly one pair is split.
struct DisplacementSet {
  std::vector<std::pair<int, int>> offsets; // (dy, dx)
  int p() const { return static_cast<int>(offsets.size()); }
  int window_radius() const; // max |dy|,|dx| over the set
};

/// Builds the p-offset search pattern: the smallest (2k+1)^2 grid holding p
/// offsets, pruned to the p nearest the origin. Distance ties keep +/- pairs
/// adjacent and prefer smaller |dy|, then smaller |dx|.
DisplacementSet displacement_set(int p);

/// As above but bounded by an explicit window radius.
DisplacementSet displacement_set(int p, int window_radius);

/// Per-block bundle consumed by the solvers: candidate blocks H, their
/// measurement-domain images A = Phi*H, DCT images B = forward*H, the
/// per-hypothesis mismatch weights gamma, and the block's measurements y.
struct HypothesisSet {
  Eigen::MatrixXd H;     // n×p
  Eigen::MatrixXd A;     // m×p
  Eigen::MatrixXd B;     // n×p
  Eigen::VectorXd gamma; // p, gamma[j] = ||y - Phi h_j||_2
  Eigen::VectorXd y;     // m
};

Eigen::VectorXd tikhonov_weights(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                 const Eigen::MatrixXd& H);

/// Gathers p candidate blocks around block_origin from one or two decoded
/// reference frames. Windows reaching outside the frame are clamped to the
/// border. With two references, even p gives the first half of the columns to
/// the earlier frame; odd p alternates column-by-column.
HypothesisSet build_hypotheses(int block_row, int block_col,
                               const std::vector<const Frame*>& references,
                               const DisplacementSet& disp, const MeasurementMatrix& phi,
                               const DctBasis& dct, const Eigen::VectorXd& y);

} // namespace cvs
