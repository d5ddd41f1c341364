#include "cvs/video_io.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cvs {

namespace fs = std::filesystem;

VideoFormat parse_format(const std::string& name) {
  if (name == "pgm-sequence" || name == "pgm") return VideoFormat::PgmSequence;
  if (name == "yuv420-planar" || name == "yuv") return VideoFormat::Yuv420Planar;
  if (name == "y4m") return VideoFormat::Y4m;
  throw Error("unknown video format '" + name + "' (expected pgm-sequence, yuv420-planar, y4m)");
}

namespace {

// next PGM header token, skipping whitespace and # comments
std::string pgm_token(std::istream& is, const std::string& path) {
  std::string tok;
  int c;
  while ((c = is.get()) != EOF) {
    if (c == '#') {
      while ((c = is.get()) != EOF && c != '\n') {}
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return tok;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  if (tok.empty()) throw Error(path + ": truncated PGM header");
  return tok;
}

Eigen::VectorXd read_luma_bytes(std::istream& is, int width, int height,
                                const std::string& what) {
  std::vector<std::uint8_t> raw(static_cast<std::size_t>(width) * height);
  is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(is.gcount()) != raw.size())
    throw Error(what + ": truncated pixel payload (got " + std::to_string(is.gcount()) +
                " of " + std::to_string(raw.size()) + " bytes)");
  Eigen::VectorXd luma(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) luma[static_cast<Eigen::Index>(i)] = raw[i];
  return luma;
}

} // namespace

Frame read_pgm(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  if (pgm_token(is, path) != "P5") throw Error(path + ": not a binary (P5) PGM file");
  const int width = std::stoi(pgm_token(is, path));
  const int height = std::stoi(pgm_token(is, path));
  const int maxval = std::stoi(pgm_token(is, path));
  if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 255)
    throw Error(path + ": unsupported PGM geometry or bit depth");
  Frame f(width, height);
  f.luma = read_luma_bytes(is, width, height, path);
  return f;
}

void write_pgm(const Frame& frame, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << "P5\n" << frame.width << " " << frame.height << "\n255\n";
  const Frame q = clamp_to_u8(frame);
  for (Eigen::Index i = 0; i < q.luma.size(); ++i)
    os.put(static_cast<char>(static_cast<std::uint8_t>(q.luma[i])));
  if (!os) throw Error("write failed: " + path);
}

std::vector<Frame> read_yuv420(const std::string& path, int width, int height, int max_frames) {
  if (width <= 0 || height <= 0)
    throw Error("yuv420-planar input needs explicit --width/--height");
  if (width % 2 != 0 || height % 2 != 0)
    throw Error("yuv420-planar dimensions must be even");
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  const std::uintmax_t file_size = fs::file_size(path);
  const std::uintmax_t frame_size = static_cast<std::uintmax_t>(width) * height * 3 / 2;
  if (file_size == 0 || file_size % frame_size != 0)
    throw Error(path + ": size " + std::to_string(file_size) +
                " is not a multiple of the expected frame size " + std::to_string(frame_size) +
                " for " + std::to_string(width) + "x" + std::to_string(height) + " 4:2:0");
  int frames = static_cast<int>(file_size / frame_size);
  if (max_frames > 0) frames = std::min(frames, max_frames);

  std::vector<Frame> out;
  out.reserve(frames);
  for (int i = 0; i < frames; ++i) {
    Frame f(width, height);
    f.luma = read_luma_bytes(is, width, height, path + " frame " + std::to_string(i));
    is.seekg(static_cast<std::streamoff>(frame_size - static_cast<std::uintmax_t>(width) * height),
             std::ios::cur); // skip chroma
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Frame> read_y4m(const std::string& path, int max_frames) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  std::string header;
  if (!std::getline(is, header) || header.rfind("YUV4MPEG2", 0) != 0)
    throw Error(path + ": missing YUV4MPEG2 signature");

  int width = 0, height = 0;
  bool mono = false;
  std::istringstream hs(header);
  std::string tag;
  hs >> tag; // signature
  while (hs >> tag) {
    switch (tag[0]) {
      case 'W': width = std::stoi(tag.substr(1)); break;
      case 'H': height = std::stoi(tag.substr(1)); break;
      case 'C':
        if (tag.rfind("Cmono", 0) == 0) mono = true;
        else if (tag.rfind("C420", 0) != 0)
          throw Error(path + ": unsupported colorspace " + tag + " (need C420* or Cmono)");
        break;
      default: break; // F, I, A, X tags irrelevant here
    }
  }
  if (width <= 0 || height <= 0) throw Error(path + ": Y4M header lacks W/H");
  const std::uintmax_t chroma = mono ? 0 : static_cast<std::uintmax_t>(width) * height / 2;

  std::vector<Frame> out;
  std::string frame_line;
  while (std::getline(is, frame_line)) {
    if (frame_line.rfind("FRAME", 0) != 0)
      throw Error(path + ": expected FRAME marker before frame " + std::to_string(out.size()));
    Frame f(width, height);
    f.luma = read_luma_bytes(is, width, height, path + " frame " + std::to_string(out.size()));
    if (chroma) is.seekg(static_cast<std::streamoff>(chroma), std::ios::cur);
    out.push_back(std::move(f));
    if (max_frames > 0 && static_cast<int>(out.size()) >= max_frames) break;
  }
  if (out.empty()) throw Error(path + ": no frames found");
  return out;
}

std::vector<Frame> ingest(const std::string& path, VideoFormat format, int width, int height,
                          int max_frames) {
  switch (format) {
    case VideoFormat::PgmSequence: {
      std::vector<std::string> files;
      if (fs::is_directory(path)) {
        for (const auto& e : fs::directory_iterator(path))
          if (e.path().extension() == ".pgm") files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
      } else {
        files.push_back(path);
      }
      if (files.empty()) throw Error(path + ": no .pgm files found");
      if (max_frames > 0 && static_cast<int>(files.size()) > max_frames)
        files.resize(max_frames);
      std::vector<Frame> out;
      out.reserve(files.size());
      for (const std::string& f : files) out.push_back(read_pgm(f));
      return out;
    }
    case VideoFormat::Yuv420Planar:
      return read_yuv420(path, width, height, max_frames);
    case VideoFormat::Y4m:
      return read_y4m(path, max_frames);
  }
  throw Error("unreachable");
}

Frame center_crop(const Frame& frame, int block_edge) {
  const int w = (frame.width / block_edge) * block_edge;
  const int h = (frame.height / block_edge) * block_edge;
  if (w <= 0 || h <= 0) throw Error("frame smaller than one block, cannot crop");
  if (w == frame.width && h == frame.height) return frame;
  const int r0 = (frame.height - h) / 2;
  const int c0 = (frame.width - w) / 2;
  Frame out(w, h);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      out.at(r, c) = frame.at(r0 + r, c0 + c);
  return out;
}

} // namespace cvs
