#pragma once

#include "cvs/encoder.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace cvs {

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// .cvs container, little-endian binary:
//   magic "CVSF", version byte, header (block edge, dimensions, group size,
//   frame count, stream seed, rates), then per frame a role tag and the raw
//   f64 measurement payload. Phi is regenerated from the seed, never stored.
void serialize(const EncodedSequence& seq, std::ostream& sink);
EncodedSequence deserialize(std::istream& source);

void save_stream(const EncodedSequence& seq, const std::string& path);
EncodedSequence load_stream(const std::string& path);

} // namespace cvs
