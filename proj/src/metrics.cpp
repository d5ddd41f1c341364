#include "cvs/metrics.hpp"

#include <cmath>
#include <limits>

namespace cvs {

double psnr(const Frame& reference, const Frame& test) {
  if (reference.width != test.width || reference.height != test.height)
    throw Error("psnr: frame dimensions differ");
  const Frame a = clamp_to_u8(reference);
  const Frame b = clamp_to_u8(test);
  const double mse = (a.luma - b.luma).squaredNorm() / static_cast<double>(a.luma.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

} // namespace cvs
