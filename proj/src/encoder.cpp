#include "cvs/encoder.hpp"

#include "cvs/rng.hpp"

#include <cmath>

namespace cvs {

GopLayout plan_gops(int frame_count, int group_size) {
  if (group_size < 3) throw Error("plan_gops: group_size must be at least 3");
  if (frame_count <= 0 || frame_count % group_size != 0)
    throw Error("plan_gops: frame count " + std::to_string(frame_count) +
                " is not a positive multiple of group size " + std::to_string(group_size));
  GopLayout layout;
  layout.group_size = group_size;
  layout.frame_count = frame_count;
  layout.frame_roles.assign(frame_count, FrameRole::NonReference);
  for (int g = 0; g < frame_count / group_size; ++g) {
    const int first = g * group_size;
    const int last = first + group_size - 1;
    layout.frame_roles[first] = FrameRole::Reference;
    layout.frame_roles[last] = FrameRole::Reference;
    layout.reference_positions.push_back(first);
    layout.reference_positions.push_back(last);
  }
  return layout;
}

Eigen::VectorXd sample_block(const Eigen::VectorXd& block, const MeasurementMatrix& phi) {
  if (block.size() != phi.n) throw Error("sample_block: block length does not match phi.n");
  return phi.entries * block;
}

MeasurementMatrix sensing_matrix_for(std::uint64_t stream_seed, double rate, int n,
                                     FrameRole role) {
  if (rate <= 0.0 || rate > 1.0) throw Error("sampling rate must lie in (0,1]");
  // rate 1.0 is the lossless identity test mode
  if (rate == 1.0) return identity_matrix(n);
  const std::uint64_t key = 2 * static_cast<std::uint64_t>(std::llround(rate * 1e6)) +
                            (role == FrameRole::NonReference ? 1 : 0);
  return gaussian_matrix(derive_seed(stream_seed, key), measurement_count(rate, n), n);
}

EncodedSequence encode_sequence(const std::vector<Frame>& frames, const GopLayout& layout,
                                double ref_rate, double nonref_rate, int block_edge,
                                std::uint64_t seed) {
  if (frames.empty()) throw Error("encode_sequence: no frames");
  if (static_cast<int>(frames.size()) != layout.frame_count)
    throw Error("encode_sequence: layout frame count does not match input");
  const Frame& first = frames.front();
  for (const Frame& f : frames)
    if (f.width != first.width || f.height != first.height)
      throw Error("encode_sequence: frames differ in dimensions");
  if (!first.divisible_by(block_edge))
    throw Error("encode_sequence: frame dimensions not divisible by block edge");

  const int n = block_edge * block_edge;
  const MeasurementMatrix phi_ref = sensing_matrix_for(seed, ref_rate, n, FrameRole::Reference);
  const MeasurementMatrix phi_nonref =
      sensing_matrix_for(seed, nonref_rate, n, FrameRole::NonReference);
  const int blocks_x = first.width / block_edge;
  const int blocks_y = first.height / block_edge;

  EncodedSequence out;
  out.width = first.width;
  out.height = first.height;
  out.block_edge = block_edge;
  out.group_size = layout.group_size;
  out.seed = seed;
  out.ref_rate = ref_rate;
  out.nonref_rate = nonref_rate;
  out.frames.reserve(frames.size());

  for (int fi = 0; fi < layout.frame_count; ++fi) {
    const bool is_ref = layout.is_reference(fi);
    const MeasurementMatrix& phi = is_ref ? phi_ref : phi_nonref;
    EncodedFrame ef;
    ef.role = is_ref ? FrameRole::Reference : FrameRole::NonReference;
    ef.rate = is_ref ? ref_rate : nonref_rate;
    ef.m = phi.m;
    ef.n = n;
    ef.seed = phi.seed;
    ef.block_measurements.resize(phi.m, blocks_x * blocks_y);
    for (int by = 0; by < blocks_y; ++by)
      for (int bx = 0; bx < blocks_x; ++bx) {
        const BlockVector b = vectorize_block(frames[fi], by * block_edge, bx * block_edge, block_edge);
        ef.block_measurements.col(by * blocks_x + bx) = sample_block(b.data, phi);
      }
    out.frames.push_back(std::move(ef));
  }
  return out;
}

} // namespace cvs
