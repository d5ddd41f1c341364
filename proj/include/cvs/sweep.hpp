#pragma once

#include "cvs/decode.hpp"
#include "cvs/metrics.hpp"

#include <string>
#include <vector>

namespace cvs {

inline constexpr const char* kLibraryVersion = "0.1.0";

struct RunSpec {
  std::string sequence_name = "sequence";
  std::vector<double> rates = {0.1, 0.3, 0.5, 0.7, 0.9}; // non-reference rates
  std::vector<int> p_values = {20, 400};
  std::vector<SolverKind> solvers = {SolverKind::MhSt, SolverKind::MhTikhonov};
  double ref_rate = 0.7;
  int group_size = 9;
  int block_edge = 16;
  std::uint64_t seed = 1;
  SolverConfig solver_config;
  SplParams spl;
  bool residual_refinement = true;
  int threads = 0;
  std::string out_dir = "out";

  void validate() const;
};

struct MetricRow {
  std::string sequence;
  std::string solver;
  double rate = 0.0;
  int p = 0;
  int frame = 0;
  bool is_reference = false;
  double psnr = 0.0;
  double decode_time = 0.0; // seconds
};

std::string solver_name(SolverKind kind);

/// Encode/decode the sequence over every (solver, rate, p) cell, collecting
/// per-frame PSNR and timing. Writes under spec.out_dir:
///   metrics.csv    per-frame PSNR rows (byte-reproducible for a fixed spec)
///   timings.csv    per-frame wall-clock decode time, kept separate so the
///                  reproducible outputs carry no clock data
///   aggregate.csv  mean PSNR over non-reference frames per cell
///   plot_<solver>_p<p>.dat   rate / PSNR pairs
///   manifest.txt   full config, seed, library version
/// Rows are flushed as they are produced.
std::vector<MetricRow> run_sweep(const RunSpec& spec, const std::vector<Frame>& frames);

} // namespace cvs
