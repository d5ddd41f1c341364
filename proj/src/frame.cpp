#include "cvs/frame.hpp"

#include <cmath>

namespace cvs {

static void check_window(const Frame& frame, int row, int col, int edge) {
  if (edge <= 0) throw Error("block edge must be positive");
  if (row < 0 || col < 0 || row + edge > frame.height || col + edge > frame.width)
    throw Error("block window (" + std::to_string(row) + "," + std::to_string(col) +
                ") size " + std::to_string(edge) + " out of bounds for " +
                std::to_string(frame.width) + "x" + std::to_string(frame.height) + " frame");
}

BlockVector vectorize_block(const Frame& frame, int row, int col, int block_edge) {
  check_window(frame, row, col, block_edge);
  BlockVector v;
  v.row = row;
  v.col = col;
  v.data.resize(block_edge * block_edge);
  for (int r = 0; r < block_edge; ++r)
    for (int c = 0; c < block_edge; ++c)
      v.data[r * block_edge + c] = frame.at(row + r, col + c);
  return v;
}

void assemble_block(const BlockVector& vec, int block_edge, Frame& frame) {
  check_window(frame, vec.row, vec.col, block_edge);
  if (vec.data.size() != block_edge * block_edge)
    throw Error("block vector length does not match block edge");
  for (int r = 0; r < block_edge; ++r)
    for (int c = 0; c < block_edge; ++c)
      frame.at(vec.row + r, vec.col + c) = vec.data[r * block_edge + c];
}

Frame clamp_to_u8(const Frame& f) {
  Frame out(f.width, f.height);
  for (Eigen::Index i = 0; i < f.luma.size(); ++i) {
    double v = std::round(f.luma[i]);
    if (v < 0.0) v = 0.0;
    if (v > 255.0) v = 255.0;
    out.luma[i] = v;
  }
  return out;
}

} // namespace cvs
