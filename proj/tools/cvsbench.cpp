#include "cvs/bitstream.hpp"
#include "cvs/sweep.hpp"
#include "cvs/video_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>

namespace {

int env_threads() {
  if (const char* v = std::getenv("CVS_THREADS")) return std::atoi(v);
  return 0;
}

std::vector<cvs::Frame> load_input(const std::string& path, const std::string& format,
                                   int width, int height, int max_frames, int block_edge) {
  auto frames = cvs::ingest(path, cvs::parse_format(format), width, height, max_frames);
  for (auto& f : frames) {
    if (!f.divisible_by(block_edge)) {
      std::cerr << "warning: " << f.width << "x" << f.height
                << " not divisible by block edge " << block_edge << ", center-cropping\n";
      f = cvs::center_crop(f, block_edge);
    }
  }
  return frames;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"compressed video sensing codec and benchmark harness"};
  app.require_subcommand(1);

  std::string input, format = "y4m", out_dir = "out", out_path, ref_path;
  int width = 0, height = 0, frames_limit = 0, group_size = 9, block_edge = 16;
  std::uint64_t seed = 1;
  double ref_rate = 0.7, nonref_rate = 0.5;
  bool no_residual = false;
  cvs::RunSpec spec;

  auto add_input_flags = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "input video path")->required();
    cmd->add_option("--format", format, "pgm-sequence | yuv420-planar | y4m");
    cmd->add_option("--width", width, "frame width (yuv420-planar only)");
    cmd->add_option("--height", height, "frame height (yuv420-planar only)");
    cmd->add_option("--frames", frames_limit, "max frames to process (0 = all)");
    cmd->add_option("--block-edge", block_edge, "block edge L");
    cmd->add_option("--group-size", group_size, "frames per GOP");
    cmd->add_option("--seed", seed, "sensing matrix seed");
    cmd->add_option("--ref-rate", ref_rate, "reference-frame sampling rate");
  };

  CLI::App* sweep = app.add_subcommand("sweep", "rate/p/solver sweep with PSNR and timing CSVs");
  add_input_flags(sweep);
  std::vector<std::string> solver_names = {"mh-st", "mh-tikhonov"};
  sweep->add_option("--rates", spec.rates, "non-reference sampling rates");
  sweep->add_option("--p", spec.p_values, "hypothesis counts");
  sweep->add_option("--solver", solver_names, "solvers: mh-st, mh-tikhonov");
  sweep->add_option("--lambda1", spec.solver_config.lambda1, "Tikhonov weight");
  sweep->add_option("--lambda2", spec.solver_config.lambda2, "sparsity weight");
  sweep->add_option("--rho", spec.solver_config.rho, "ADMM penalty");
  sweep->add_option("--iters", spec.solver_config.k_max, "ADMM iteration count");
  sweep->add_flag("--no-residual", no_residual, "disable residual refinement");
  sweep->add_option("--out-dir", out_dir, "output directory");
  sweep->add_option("--name", spec.sequence_name, "sequence name used in CSV rows");

  CLI::App* encode = app.add_subcommand("encode", "compressively sample a sequence to a .cvs stream");
  add_input_flags(encode);
  encode->add_option("--rate", nonref_rate, "non-reference sampling rate");
  encode->add_option("--output", out_path, "output .cvs path")->required();

  CLI::App* decode = app.add_subcommand("decode", "decode a .cvs stream to PGM frames");
  decode->add_option("--input", input, "input .cvs path")->required();
  decode->add_option("--out-dir", out_dir, "directory for decoded .pgm frames");
  decode->add_option("--p", spec.p_values, "hypothesis count (first value used)");
  decode->add_option("--solver", solver_names, "solver (first value used)");
  decode->add_option("--lambda1", spec.solver_config.lambda1, "Tikhonov weight");
  decode->add_option("--lambda2", spec.solver_config.lambda2, "sparsity weight");
  decode->add_option("--rho", spec.solver_config.rho, "ADMM penalty");
  decode->add_option("--iters", spec.solver_config.k_max, "ADMM iteration count");
  decode->add_flag("--no-residual", no_residual, "disable residual refinement");

  CLI::App* psnr_cmd = app.add_subcommand("psnr", "PSNR between two PGM files");
  psnr_cmd->add_option("--reference", ref_path, "reference .pgm")->required();
  psnr_cmd->add_option("--test", out_path, "test .pgm")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    auto parse_solvers = [&] {
      std::vector<cvs::SolverKind> kinds;
      for (const auto& s : solver_names) {
        if (s == "mh-st") kinds.push_back(cvs::SolverKind::MhSt);
        else if (s == "mh-tikhonov") kinds.push_back(cvs::SolverKind::MhTikhonov);
        else throw cvs::Error("unknown solver '" + s + "'");
      }
      return kinds;
    };

    if (sweep->parsed()) {
      const auto frames = load_input(input, format, width, height, frames_limit, block_edge);
      spec.solvers = parse_solvers();
      spec.ref_rate = ref_rate;
      spec.group_size = group_size;
      spec.block_edge = block_edge;
      spec.seed = seed;
      spec.residual_refinement = !no_residual;
      spec.threads = env_threads();
      spec.out_dir = out_dir;
      const auto rows = cvs::run_sweep(spec, frames);
      std::cout << rows.size() << " metric rows written under " << out_dir << "\n";
    } else if (encode->parsed()) {
      const auto frames = load_input(input, format, width, height, frames_limit, block_edge);
      const auto layout = cvs::plan_gops(static_cast<int>(frames.size()), group_size);
      const auto enc = cvs::encode_sequence(frames, layout, ref_rate, nonref_rate, block_edge, seed);
      cvs::save_stream(enc, out_path);
      std::cout << "wrote " << out_path << " (" << frames.size() << " frames)\n";
    } else if (decode->parsed()) {
      const auto enc = cvs::load_stream(input);
      cvs::DecodeConfig cfg;
      cfg.solver = parse_solvers().front();
      cfg.solver_config = spec.solver_config;
      cfg.p = spec.p_values.front();
      cfg.residual_refinement = !no_residual;
      cfg.threads = env_threads();
      const auto dec = cvs::decode_sequence(enc, cfg);
      std::filesystem::create_directories(out_dir);
      for (std::size_t i = 0; i < dec.frames.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "frame_%04zu.pgm", i);
        cvs::write_pgm(dec.frames[i], out_dir + "/" + name);
      }
      std::cout << "decoded " << dec.frames.size() << " frames into " << out_dir << "\n";
    } else if (psnr_cmd->parsed()) {
      std::cout << cvs::psnr(cvs::read_pgm(ref_path), cvs::read_pgm(out_path)) << " dB\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
