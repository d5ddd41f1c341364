#pragma once

#include "cvs/frame.hpp"

#include <string>
#include <vector>

namespace cvs {

enum class VideoFormat { PgmSequence, Yuv420Planar, Y4m };

VideoFormat parse_format(const std::string& name);

/// Reads the luma plane(s) of a video input. PgmSequence accepts a single .pgm
/// file or a directory of them (sorted by name); Yuv420Planar needs explicit
/// dimensions; Y4m reads them from the stream header. Chroma is discarded.
std::vector<Frame> ingest(const std::string& path, VideoFormat format, int width = 0,
                          int height = 0, int max_frames = 0);

Frame read_pgm(const std::string& path);
void write_pgm(const Frame& frame, const std::string& path);

std::vector<Frame> read_yuv420(const std::string& path, int width, int height,
                               int max_frames = 0);
std::vector<Frame> read_y4m(const std::string& path, int max_frames = 0);

/// Center-crops to the largest dimensions divisible by block_edge.
Frame center_crop(const Frame& frame, int block_edge);

} // namespace cvs
