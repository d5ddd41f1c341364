#include "cvs/bitstream.hpp"

#include <cstring>
#include <fstream>
#include <ostream>
#include <istream>

namespace cvs {

namespace {

constexpr char kMagic[4] = {'C', 'V', 'S', 'F'};
constexpr std::uint8_t kVersion = 1;

class Writer {
public:
  explicit Writer(std::ostream& os) : os_(os) {}
  void bytes(const void* p, std::size_t len) { os_.write(static_cast<const char*>(p), len); }
  void u8(std::uint8_t v) { bytes(&v, 1); }
  void u32(std::uint32_t v) { bytes(&v, 4); }
  void u64(std::uint64_t v) { bytes(&v, 8); }
  void f64(double v) { bytes(&v, 8); }

private:
  std::ostream& os_;
};

class Reader {
public:
  explicit Reader(std::istream& is) : is_(is) {}
  void bytes(void* p, std::size_t len) {
    is_.read(static_cast<char*>(p), len);
    if (static_cast<std::size_t>(is_.gcount()) != len)
      throw ParseError("unexpected end of stream", offset_ + static_cast<std::size_t>(is_.gcount()));
    offset_ += len;
  }
  std::uint8_t u8() { std::uint8_t v; bytes(&v, 1); return v; }
  std::uint32_t u32() { std::uint32_t v; bytes(&v, 4); return v; }
  std::uint64_t u64() { std::uint64_t v; bytes(&v, 8); return v; }
  double f64() { double v; bytes(&v, 8); return v; }
  std::size_t offset() const { return offset_; }

private:
  std::istream& is_;
  std::size_t offset_ = 0;
};

} // namespace

ParseError::ParseError(const std::string& what, std::size_t offset)
    : Error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

void serialize(const EncodedSequence& seq, std::ostream& sink) {
  // assumes a little-endian host; checked at configure time is overkill for
  // the supported targets, so just a static_assert on layout
  static_assert(sizeof(double) == 8);
  Writer w(sink);
  w.bytes(kMagic, 4);
  w.u8(kVersion);
  w.u32(static_cast<std::uint32_t>(seq.block_edge));
  w.u32(static_cast<std::uint32_t>(seq.width));
  w.u32(static_cast<std::uint32_t>(seq.height));
  w.u32(static_cast<std::uint32_t>(seq.group_size));
  w.u32(static_cast<std::uint32_t>(seq.frames.size()));
  w.u64(seq.seed);
  w.f64(seq.ref_rate);
  w.f64(seq.nonref_rate);
  for (const EncodedFrame& f : seq.frames) {
    w.u8(static_cast<std::uint8_t>(f.role));
    w.u32(static_cast<std::uint32_t>(f.m));
    w.u32(static_cast<std::uint32_t>(f.n));
    w.u32(static_cast<std::uint32_t>(f.block_measurements.cols()));
    w.u64(f.seed);
    w.f64(f.rate);
    w.bytes(f.block_measurements.data(), sizeof(double) * f.block_measurements.size());
  }
  if (!sink) throw Error("serialize: write failed");
}

EncodedSequence deserialize(std::istream& source) {
  Reader r(source);
  char magic[4];
  r.bytes(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) throw ParseError("bad magic, not a .cvs stream", 0);
  const std::uint8_t version = r.u8();
  if (version != kVersion)
    throw ParseError("unsupported stream version " + std::to_string(version), 4);

  EncodedSequence seq;
  seq.block_edge = static_cast<int>(r.u32());
  seq.width = static_cast<int>(r.u32());
  seq.height = static_cast<int>(r.u32());
  seq.group_size = static_cast<int>(r.u32());
  const std::uint32_t frame_count = r.u32();
  seq.seed = r.u64();
  seq.ref_rate = r.f64();
  seq.nonref_rate = r.f64();
  if (seq.block_edge <= 0 || seq.width <= 0 || seq.height <= 0)
    throw ParseError("invalid header dimensions", r.offset());

  const long expected_blocks =
      static_cast<long>(seq.width / seq.block_edge) * (seq.height / seq.block_edge);
  seq.frames.reserve(frame_count);
  for (std::uint32_t i = 0; i < frame_count; ++i) {
    EncodedFrame f;
    f.role = static_cast<FrameRole>(r.u8());
    if (f.role != FrameRole::Reference && f.role != FrameRole::NonReference)
      throw ParseError("invalid frame role tag", r.offset());
    f.m = static_cast<int>(r.u32());
    f.n = static_cast<int>(r.u32());
    const std::uint32_t blocks = r.u32();
    f.seed = r.u64();
    f.rate = r.f64();
    if (f.m <= 0 || f.n != seq.block_edge * seq.block_edge || blocks != expected_blocks)
      throw ParseError("frame header inconsistent with stream header", r.offset());
    f.block_measurements.resize(f.m, blocks);
    r.bytes(f.block_measurements.data(), sizeof(double) * f.block_measurements.size());
    seq.frames.push_back(std::move(f));
  }
  return seq;
}

void save_stream(const EncodedSequence& seq, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  serialize(seq, os);
}

EncodedSequence load_stream(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  return deserialize(is);
}

} // namespace cvs
