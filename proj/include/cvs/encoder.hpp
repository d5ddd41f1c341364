#pragma once

#include "cvs/frame.hpp"
#include "cvs/sensing.hpp"

#include <cstdint>
#include <vector>

namespace cvs {

enum class FrameRole : std::uint8_t { Reference = 0, NonReference = 1 };

/// Frame-role assignment within groups of pictures. Each group's first and
/// last frames are references; consecutive groups share no frames.
struct GopLayout {
  int group_size = 9;
  int frame_count = 0;
  std::vector<FrameRole> frame_roles;
  std::vector<int> reference_positions;

  bool is_reference(int frame) const { return frame_roles[frame] == FrameRole::Reference; }
  int group_of(int frame) const { return frame / group_size; }
  // decoded endpoints a non-reference frame predicts from
  std::pair<int, int> group_references(int frame) const {
    const int g = group_of(frame);
    return {g * group_size, g * group_size + group_size - 1};
  }
};

GopLayout plan_gops(int frame_count, int group_size);

struct EncodedFrame {
  FrameRole role = FrameRole::Reference;
  double rate = 0.0;
  int m = 0;
  int n = 0;
  std::uint64_t seed = 0;
  // one m-vector per block, raster order, stored as columns
  Eigen::MatrixXd block_measurements;
};

struct EncodedSequence {
  int width = 0;
  int height = 0;
  int block_edge = 0;
  int group_size = 0;
  std::uint64_t seed = 0;
  double ref_rate = 0.0;
  double nonref_rate = 0.0;
  std::vector<EncodedFrame> frames;
};

Eigen::VectorXd sample_block(const Eigen::VectorXd& block, const MeasurementMatrix& phi);

/// Sensing matrix used for one role of one stream; derived deterministically
/// from the stream seed, the rate and the role so the decoder can regenerate
/// it. The role keeps the reference and non-reference matrices distinct even
/// when both roles sample at the same rate.
MeasurementMatrix sensing_matrix_for(std::uint64_t stream_seed, double rate, int n,
                                     FrameRole role = FrameRole::Reference);

EncodedSequence encode_sequence(const std::vector<Frame>& frames, const GopLayout& layout,
                                double ref_rate, double nonref_rate, int block_edge,
                                std::uint64_t seed);

} // namespace cvs
