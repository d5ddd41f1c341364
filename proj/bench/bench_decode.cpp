// Compares the OpenMP block kernels against the serial reference path on a
// synthetic encoded stream. Run with --benchmark_filter=... to narrow down.

#include "cvs/decode.hpp"
#include "cvs/metrics.hpp"
#include "cvs/rng.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace cvs;

namespace {

Frame texture_frame(int w, int h, double t) {
  Frame f(w, h);
  const double pi = 3.14159265358979;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      const double y = r + t, x = c + t;
      double v = 128.0 + 55.0 * std::cos(2.0 * pi * y / 24.0) +
                 35.0 * std::cos(2.0 * pi * x / 17.0) +
                 20.0 * std::cos(2.0 * pi * (x + 2.0 * y) / 37.0);
      f.at(r, c) = std::min(255.0, std::max(0.0, v));
    }
  return f;
}

struct Fixture {
  EncodedSequence enc;
  Frame ref_first{1, 1};
  Frame ref_last{1, 1};
  MeasurementMatrix phi_ref;
  MeasurementMatrix phi_nonref;
  DctBasis dct = DctBasis::make(16);

  explicit Fixture(int edge_blocks) {
    const int w = edge_blocks * 16, h = edge_blocks * 16;
    std::vector<Frame> frames;
    for (int i = 0; i < 3; ++i) frames.push_back(texture_frame(w, h, i));
    enc = encode_sequence(frames, plan_gops(3, 3), 0.7, 0.5, 16, 11);
    phi_ref = sensing_matrix_for(enc.seed, enc.ref_rate, 256, FrameRole::Reference);
    phi_nonref = sensing_matrix_for(enc.seed, enc.nonref_rate, 256, FrameRole::NonReference);
    SplParams spl;
    ref_first = serial_ref::decode_reference(enc.frames[0], w, h, phi_ref, dct, spl);
    ref_last = serial_ref::decode_reference(enc.frames[2], w, h, phi_ref, dct, spl);
  }
};

Fixture& fixture(int edge_blocks) {
  static Fixture small(4);
  static Fixture large(8);
  return edge_blocks == 4 ? small : large;
}

void BM_reference_serial(benchmark::State& state) {
  Fixture& fx = fixture(static_cast<int>(state.range(0)));
  SplParams spl;
  for (auto _ : state) {
    Frame out = serial_ref::decode_reference(fx.enc.frames[0], fx.ref_first.width,
                                             fx.ref_first.height, fx.phi_ref, fx.dct, spl);
    benchmark::DoNotOptimize(out.luma.data());
  }
}

void BM_reference_omp(benchmark::State& state) {
  Fixture& fx = fixture(static_cast<int>(state.range(0)));
  SplParams spl;
  for (auto _ : state) {
    Frame out = decode_reference(fx.enc.frames[0], fx.ref_first.width, fx.ref_first.height,
                                 fx.phi_ref, fx.dct, spl);
    benchmark::DoNotOptimize(out.luma.data());
  }
}

void BM_non_reference_serial(benchmark::State& state) {
  Fixture& fx = fixture(static_cast<int>(state.range(0)));
  DecodeConfig cfg;
  cfg.p = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Frame out = serial_ref::decode_non_reference(fx.enc.frames[1], fx.ref_first, fx.ref_last,
                                                 cfg, fx.phi_nonref, fx.dct);
    benchmark::DoNotOptimize(out.luma.data());
  }
}

void BM_non_reference_omp(benchmark::State& state) {
  Fixture& fx = fixture(static_cast<int>(state.range(0)));
  DecodeConfig cfg;
  cfg.p = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Frame out = decode_non_reference(fx.enc.frames[1], fx.ref_first, fx.ref_last, cfg,
                                     fx.phi_nonref, fx.dct);
    benchmark::DoNotOptimize(out.luma.data());
  }
}

BENCHMARK(BM_reference_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reference_omp)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_non_reference_serial)
    ->Args({4, 20})
    ->Args({8, 20})
    ->Args({4, 400})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_non_reference_omp)
    ->Args({4, 20})
    ->Args({8, 20})
    ->Args({4, 400})
    ->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
