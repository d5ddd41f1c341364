#include "cvs/sweep.hpp"

#include "cvs/bitstream.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

namespace cvs {

namespace fs = std::filesystem;

void RunSpec::validate() const {
  if (rates.empty()) throw Error("RunSpec: rate list is empty");
  if (p_values.empty()) throw Error("RunSpec: p list is empty");
  if (solvers.empty()) throw Error("RunSpec: solver list is empty");
  for (double r : rates)
    if (r <= 0.0 || r > 1.0) throw Error("RunSpec: rates must lie in (0,1]");
  for (int p : p_values)
    if (p < 1) throw Error("RunSpec: p must be at least 1");
  if (ref_rate <= 0.0 || ref_rate > 1.0) throw Error("RunSpec: ref_rate must lie in (0,1]");
  solver_config.validate();
}

std::string solver_name(SolverKind kind) {
  return kind == SolverKind::MhSt ? "mh-st" : "mh-tikhonov";
}

namespace {

std::string fmt(double v, int digits = 6) {
  if (std::isinf(v)) return kPsnrInfSentinel;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string fmt_rate(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", r);
  return buf;
}

void write_manifest(const RunSpec& spec, const std::string& path) {
  std::ofstream os(path);
  os << "library_version " << kLibraryVersion << "\n"
     << "sequence " << spec.sequence_name << "\n"
     << "seed " << spec.seed << "\n"
     << "block_edge " << spec.block_edge << "\n"
     << "group_size " << spec.group_size << "\n"
     << "ref_rate " << fmt_rate(spec.ref_rate) << "\n"
     << "residual_refinement " << (spec.residual_refinement ? 1 : 0) << "\n"
     << "lambda1 " << fmt_rate(spec.solver_config.lambda1) << "\n"
     << "lambda2 " << fmt_rate(spec.solver_config.lambda2) << "\n"
     << "rho " << fmt_rate(spec.solver_config.rho) << "\n"
     << "k_max " << spec.solver_config.k_max << "\n"
     << "spl_iters " << spec.spl.iters << "\n"
     << "spl_tau0 " << fmt_rate(spec.spl.tau0) << "\n"
     << "spl_tau_decay " << fmt_rate(spec.spl.tau_decay) << "\n"
     << "threads " << spec.threads << "\n";
  os << "rates";
  for (double r : spec.rates) os << " " << fmt_rate(r);
  os << "\np_values";
  for (int p : spec.p_values) os << " " << p;
  os << "\nsolvers";
  for (SolverKind s : spec.solvers) os << " " << solver_name(s);
  os << "\n";
}

} // namespace

std::vector<MetricRow> run_sweep(const RunSpec& spec, const std::vector<Frame>& frames) {
  spec.validate();
  if (frames.empty()) throw Error("run_sweep: no input frames");

  fs::create_directories(spec.out_dir);
  const std::string dir = spec.out_dir + "/";
  write_manifest(spec, dir + "manifest.txt");

  std::ofstream metrics(dir + "metrics.csv");
  std::ofstream timings(dir + "timings.csv");
  metrics << "sequence,solver,rate,p,frame,role,psnr\n";
  timings << "sequence,solver,rate,p,frame,role,decode_time\n";

  const GopLayout layout = plan_gops(static_cast<int>(frames.size()), spec.group_size);

  std::vector<MetricRow> rows;
  // aggregate keyed by (solver, p, rate); map keeps the CSV ordering stable
  std::map<std::tuple<std::string, int, double>, std::pair<double, int>> aggregate;

  for (SolverKind solver : spec.solvers) {
    for (int p : spec.p_values) {
      for (double rate : spec.rates) {
        const EncodedSequence enc = encode_sequence(frames, layout, spec.ref_rate, rate,
                                                    spec.block_edge, spec.seed);
        DecodeConfig cfg;
        cfg.solver = solver;
        cfg.solver_config = spec.solver_config;
        cfg.p = p;
        cfg.residual_refinement = spec.residual_refinement;
        cfg.spl = spec.spl;
        cfg.threads = spec.threads;
        const DecodedSequence dec = decode_sequence(enc, cfg);

        for (int i = 0; i < static_cast<int>(frames.size()); ++i) {
          MetricRow row;
          row.sequence = spec.sequence_name;
          row.solver = solver_name(solver);
          row.rate = rate;
          row.p = p;
          row.frame = i;
          row.is_reference = layout.is_reference(i);
          row.psnr = psnr(frames[i], dec.frames[i]);
          row.decode_time = dec.decode_seconds[i];
          rows.push_back(row);

          const std::string role = row.is_reference ? "reference" : "non-reference";
          metrics << row.sequence << ',' << row.solver << ',' << fmt_rate(rate) << ',' << p
                  << ',' << i << ',' << role << ',' << fmt(row.psnr) << '\n';
          timings << row.sequence << ',' << row.solver << ',' << fmt_rate(rate) << ',' << p
                  << ',' << i << ',' << role << ',' << fmt(row.decode_time) << '\n';
          if (!row.is_reference) {
            auto& [sum, count] = aggregate[{row.solver, p, rate}];
            sum += row.psnr;
            count += 1;
          }
        }
        metrics.flush();
        timings.flush();
      }
    }
  }

  std::ofstream agg(dir + "aggregate.csv");
  agg << "sequence,solver,rate,p,mean_psnr\n";
  for (const auto& [key, value] : aggregate) {
    const auto& [solver, p, rate] = key;
    agg << spec.sequence_name << ',' << solver << ',' << fmt_rate(rate) << ',' << p << ','
        << fmt(value.first / value.second) << '\n';
  }

  // rate vs mean PSNR, one file per (solver, p), gnuplot-ready
  for (SolverKind solver : spec.solvers) {
    for (int p : spec.p_values) {
      std::ofstream plot(dir + "plot_" + solver_name(solver) + "_p" + std::to_string(p) + ".dat");
      for (double rate : spec.rates) {
        const auto it = aggregate.find({solver_name(solver), p, rate});
        if (it != aggregate.end())
          plot << fmt_rate(rate) << ' ' << fmt(it->second.first / it->second.second) << '\n';
      }
    }
  }

  return rows;
}

} // namespace cvs
