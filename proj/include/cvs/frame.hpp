#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace cvs {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Grayscale luma plane, row-major, values kept as doubles until output time.
struct Frame {
  int width = 0;
  int height = 0;
  Eigen::VectorXd luma; // size width*height, pixel (r,c) at index r*width + c

  Frame() = default;
  Frame(int w, int h) : width(w), height(h), luma(Eigen::VectorXd::Zero(w * h)) {}

  double& at(int row, int col) { return luma[row * width + col]; }
  double at(int row, int col) const { return luma[row * width + col]; }

  bool divisible_by(int block_edge) const {
    return block_edge > 0 && width % block_edge == 0 && height % block_edge == 0;
  }
};

/// Row-wise vectorized L×L block together with its position in the frame.
struct BlockVector {
  Eigen::VectorXd data; // length L*L
  int row = 0;          // top-left pixel of the block
  int col = 0;
};

BlockVector vectorize_block(const Frame& frame, int row, int col, int block_edge);

/// Writes vec back into its L×L window; the inverse of vectorize_block.
void assemble_block(const BlockVector& vec, int block_edge, Frame& frame);

/// Clamp to [0,255] and round, as done for 8-bit output and PSNR.
Frame clamp_to_u8(const Frame& f);

} // namespace cvs
