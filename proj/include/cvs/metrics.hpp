#pragma once

#include "cvs/frame.hpp"

namespace cvs {

/// 10*log10(255^2/MSE) over clamped-rounded 8-bit pixels; +infinity when the
/// planes are identical.
double psnr(const Frame& reference, const Frame& test);

/// The string written to CSV for an infinite PSNR.
inline constexpr const char* kPsnrInfSentinel = "inf";

} // namespace cvs
