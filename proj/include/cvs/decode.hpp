#pragma once

#include "cvs/encoder.hpp"
#include "cvs/hypothesis.hpp"
#include "cvs/solvers.hpp"

#include <vector>

namespace cvs {

enum class SolverKind { MhSt, MhTikhonov };

struct DecodeConfig {
  SolverKind solver = SolverKind::MhSt;
  SolverConfig solver_config;
  int p = 20;
  bool residual_refinement = true;
  SplParams spl;
  int threads = 0; // 0 = OpenMP default, 1 = serial reference path
};

struct DecodedSequence {
  std::vector<Frame> frames;
  std::vector<double> decode_seconds; // per frame, solver work only
};

/// Block-independent SPL recovery of a reference frame.
Frame decode_reference(const EncodedFrame& enc, int width, int height,
                       const MeasurementMatrix& phi, const DctBasis& dct,
                       const SplParams& spl, int threads = 0);

/// MH recovery of a non-reference frame against the group's two decoded
/// reference frames, with optional residual refinement.
Frame decode_non_reference(const EncodedFrame& enc, const Frame& ref_first,
                           const Frame& ref_last, const DecodeConfig& cfg,
                           const MeasurementMatrix& phi, const DctBasis& dct);

/// y_r = y - Phi*x_tilde, recovered with SPL over a widened clamp range and
/// added back onto the first-stage block.
Eigen::VectorXd residual_refine(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                const Eigen::VectorXd& x_tilde, const DctBasis& dct,
                                const SplParams& spl);

DecodedSequence decode_sequence(const EncodedSequence& seq, const DecodeConfig& cfg);

namespace serial_ref {
// Plain-loop implementations kept as the reference the OpenMP kernels are
// checked against.
Frame decode_reference(const EncodedFrame& enc, int width, int height,
                       const MeasurementMatrix& phi, const DctBasis& dct,
                       const SplParams& spl);
Frame decode_non_reference(const EncodedFrame& enc, const Frame& ref_first,
                           const Frame& ref_last, const DecodeConfig& cfg,
                           const MeasurementMatrix& phi, const DctBasis& dct);
} // namespace serial_ref

} // namespace cvs
