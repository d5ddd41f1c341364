#include "cvs/decode.hpp"

#include <chrono>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cvs {

namespace {

struct BlockGrid {
  int blocks_x;
  int blocks_y;
  int L;
  int count() const { return blocks_x * blocks_y; }
  int row_of(int idx) const { return (idx / blocks_x) * L; }
  int col_of(int idx) const { return (idx % blocks_x) * L; }
};

BlockGrid grid_for(int width, int height, int L) { return {width / L, height / L, L}; }

Eigen::VectorXd recover_reference_block(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                        const DctBasis& dct, const SplParams& spl) {
  return spl_lite_recover(y, phi, dct, spl);
}

Eigen::VectorXd recover_nonref_block(const Eigen::VectorXd& y, int row, int col,
                                     const Frame& ref_first, const Frame& ref_last,
                                     const DisplacementSet& disp, const DecodeConfig& cfg,
                                     const MeasurementMatrix& phi, const DctBasis& dct) {
  const std::vector<const Frame*> refs{&ref_first, &ref_last};
  const HypothesisSet hyp = build_hypotheses(row, col, refs, disp, phi, dct, y);

  Eigen::VectorXd block;
  if (cfg.solver == SolverKind::MhSt)
    block = mh_st_solve(y, hyp, cfg.solver_config).x_block;
  else
    block = mh_tikhonov_solve(y, hyp, cfg.solver_config.lambda1);

  if (cfg.residual_refinement) {
    SplParams residual_spl = cfg.spl;
    residual_spl.clamp_lo = -255.0;
    residual_spl.clamp_hi = 255.0;
    block = residual_refine(y, phi, block, dct, residual_spl);
  }
  // hypotheses and outputs are pixels
  return block.cwiseMax(0.0).cwiseMin(255.0);
}

void check_frame_shape(const EncodedFrame& enc, int width, int height, const BlockGrid& grid,
                       const MeasurementMatrix& phi) {
  if (enc.n != grid.L * grid.L || phi.n != enc.n || phi.m != enc.m)
    throw Error("decode: frame header does not match sensing matrix");
  if (enc.block_measurements.cols() != grid.count())
    throw Error("decode: block count does not match frame dimensions");
  (void)width;
  (void)height;
}

} // namespace

Frame decode_reference(const EncodedFrame& enc, int width, int height,
                       const MeasurementMatrix& phi, const DctBasis& dct,
                       const SplParams& spl, int threads) {
  if (enc.role != FrameRole::Reference) throw Error("decode_reference: frame is not a reference");
  const BlockGrid grid = grid_for(width, height, dct.L);
  check_frame_shape(enc, width, height, grid, phi);
  Frame out(width, height);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
  for (int b = 0; b < grid.count(); ++b) {
    BlockVector v;
    v.data = recover_reference_block(enc.block_measurements.col(b), phi, dct, spl);
    v.row = grid.row_of(b);
    v.col = grid.col_of(b);
    assemble_block(v, grid.L, out);
  }
  return out;
}

Frame decode_non_reference(const EncodedFrame& enc, const Frame& ref_first,
                           const Frame& ref_last, const DecodeConfig& cfg,
                           const MeasurementMatrix& phi, const DctBasis& dct) {
  if (enc.role != FrameRole::NonReference)
    throw Error("decode_non_reference: frame is not a non-reference frame");
  const BlockGrid grid = grid_for(ref_first.width, ref_first.height, dct.L);
  check_frame_shape(enc, ref_first.width, ref_first.height, grid, phi);
  const DisplacementSet disp = displacement_set(cfg.p);
  Frame out(ref_first.width, ref_first.height);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    num_threads(cfg.threads > 0 ? cfg.threads : omp_get_max_threads())
#endif
  for (int b = 0; b < grid.count(); ++b) {
    BlockVector v;
    v.row = grid.row_of(b);
    v.col = grid.col_of(b);
    v.data = recover_nonref_block(enc.block_measurements.col(b), v.row, v.col, ref_first,
                                  ref_last, disp, cfg, phi, dct);
    assemble_block(v, grid.L, out);
  }
  return out;
}

Eigen::VectorXd residual_refine(const Eigen::VectorXd& y, const MeasurementMatrix& phi,
                                const Eigen::VectorXd& x_tilde, const DctBasis& dct,
                                const SplParams& spl) {
  const Eigen::VectorXd y_residual = y - phi.entries * x_tilde;
  return x_tilde + spl_lite_recover(y_residual, phi, dct, spl);
}

DecodedSequence decode_sequence(const EncodedSequence& seq, const DecodeConfig& cfg) {
  const int frame_count = static_cast<int>(seq.frames.size());
  const GopLayout layout = plan_gops(frame_count, seq.group_size);
  for (int i = 0; i < frame_count; ++i)
    if ((seq.frames[i].role == FrameRole::Reference) != layout.is_reference(i))
      throw Error("decode_sequence: stream roles do not match the GOP layout");

  const int n = seq.block_edge * seq.block_edge;
  const DctBasis dct = DctBasis::make(seq.block_edge);
  const MeasurementMatrix phi_ref =
      sensing_matrix_for(seq.seed, seq.ref_rate, n, FrameRole::Reference);
  const MeasurementMatrix phi_nonref =
      sensing_matrix_for(seq.seed, seq.nonref_rate, n, FrameRole::NonReference);

  using clock = std::chrono::steady_clock;
  DecodedSequence out;
  out.frames.resize(frame_count);
  out.decode_seconds.assign(frame_count, 0.0);

  // references first, each interior frame then predicts from its group's
  // decoded endpoints
  for (int i : layout.reference_positions) {
    const auto t0 = clock::now();
    out.frames[i] = decode_reference(seq.frames[i], seq.width, seq.height, phi_ref, dct,
                                     cfg.spl, cfg.threads);
    out.decode_seconds[i] = std::chrono::duration<double>(clock::now() - t0).count();
  }
  for (int i = 0; i < frame_count; ++i) {
    if (layout.is_reference(i)) continue;
    const auto [first, last] = layout.group_references(i);
    const auto t0 = clock::now();
    out.frames[i] = decode_non_reference(seq.frames[i], out.frames[first], out.frames[last],
                                         cfg, phi_nonref, dct);
    out.decode_seconds[i] = std::chrono::duration<double>(clock::now() - t0).count();
  }
  return out;
}

namespace serial_ref {

Frame decode_reference(const EncodedFrame& enc, int width, int height,
                       const MeasurementMatrix& phi, const DctBasis& dct,
                       const SplParams& spl) {
  const BlockGrid grid = grid_for(width, height, dct.L);
  check_frame_shape(enc, width, height, grid, phi);
  Frame out(width, height);
  for (int b = 0; b < grid.count(); ++b) {
    BlockVector v;
    v.data = recover_reference_block(enc.block_measurements.col(b), phi, dct, spl);
    v.row = grid.row_of(b);
    v.col = grid.col_of(b);
    assemble_block(v, grid.L, out);
  }
  return out;
}

Frame decode_non_reference(const EncodedFrame& enc, const Frame& ref_first,
                           const Frame& ref_last, const DecodeConfig& cfg,
                           const MeasurementMatrix& phi, const DctBasis& dct) {
  const BlockGrid grid = grid_for(ref_first.width, ref_first.height, dct.L);
  check_frame_shape(enc, ref_first.width, ref_first.height, grid, phi);
  const DisplacementSet disp = displacement_set(cfg.p);
  Frame out(ref_first.width, ref_first.height);
  for (int b = 0; b < grid.count(); ++b) {
    BlockVector v;
    v.row = grid.row_of(b);
    v.col = grid.col_of(b);
    v.data = recover_nonref_block(enc.block_measurements.col(b), v.row, v.col, ref_first,
                                  ref_last, disp, cfg, phi, dct);
    assemble_block(v, grid.L, out);
  }
  return out;
}

} // namespace serial_ref

} // namespace cvs
