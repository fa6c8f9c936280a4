#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringburst/analytics.hpp"
#include "ringburst/montecarlo.hpp"
#include "ringburst/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << body;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Options shared by `simulate` and `phases-trace`: a config file plus
// command-line overrides applied on top of it.
struct SimOptions {
  std::string config_path;
  std::optional<std::uint64_t> n;
  std::optional<double> p;
  std::optional<double> gamma;
  std::optional<std::uint32_t> replicates;
  std::optional<std::uint64_t> seed;
  std::optional<int> dim;
  std::optional<double> alpha;
  std::optional<double> count;
  std::optional<double> window_y;
  std::optional<double> bstar;
  std::optional<std::uint32_t> r;
  std::optional<std::uint32_t> workers;
  bool lattice_on = false;
  bool lattice_off = false;
  bool force_materialized = false;
};

void add_sim_options(CLI::App* cmd, SimOptions& opt) {
  cmd->add_option("--config", opt.config_path,
                  "JSON config file (a bare config or a manifest with a \"config\" object)");
  cmd->add_option("--n", opt.n, "number of vertices");
  cmd->add_option("--p", opt.p, "random-edge probability");
  cmd->add_option("--gamma", opt.gamma, "set p = n^-gamma");
  cmd->add_option("--replicates", opt.replicates, "number of replicates");
  cmd->add_option("--seed", opt.seed, "master seed");
  cmd->add_option("--dim", opt.dim, "lattice dimension (1 or 2)");
  cmd->add_option("--alpha", opt.alpha, "initial size as a fraction of a_c");
  cmd->add_option("--count", opt.count, "initial size as an absolute count");
  cmd->add_option("--window-y", opt.window_y, "initial size as a_c* + y*sqrt(a_c)");
  cmd->add_option("--bstar", opt.bstar, "almost-percolation slack b*");
  cmd->add_option("--r", opt.r, "activation threshold");
  cmd->add_option("--workers", opt.workers, "worker thread count");
  cmd->add_flag("--lattice", opt.lattice_on, "enable the ring/torus lattice");
  cmd->add_flag("--no-lattice", opt.lattice_off, "disable the lattice (random edges only)");
  cmd->add_flag("--force-materialized", opt.force_materialized,
                "always materialize the edge list");
}

ringburst::ExperimentConfig build_config(const SimOptions& opt) {
  ringburst::ExperimentConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = ringburst::config_from_json(read_file(opt.config_path));
  }
  if (opt.n) cfg.n = *opt.n;
  if (opt.p) {
    cfg.p = *opt.p;
    cfg.gamma = -1.0;
  }
  if (opt.gamma) {
    cfg.gamma = *opt.gamma;
    cfg.p = -1.0;
  }
  if (opt.replicates) cfg.replicates = *opt.replicates;
  if (opt.seed) cfg.master_seed = *opt.seed;
  if (opt.dim) cfg.dim = *opt.dim;
  int initial_picks = (opt.alpha ? 1 : 0) + (opt.count ? 1 : 0) + (opt.window_y ? 1 : 0);
  if (initial_picks > 1) {
    throw std::invalid_argument(
        "config error: at most one of --alpha, --count, --window-y may be given");
  }
  if (opt.alpha) {
    cfg.initial = {ringburst::InitialMode::AlphaOfAc, *opt.alpha};
  } else if (opt.count) {
    cfg.initial = {ringburst::InitialMode::Count, *opt.count};
  } else if (opt.window_y) {
    cfg.initial = {ringburst::InitialMode::WindowOffset, *opt.window_y};
  }
  if (opt.bstar) cfg.almost_threshold = *opt.bstar;
  if (opt.r) cfg.r = *opt.r;
  if (opt.workers) cfg.workers = *opt.workers;
  if (opt.lattice_on && opt.lattice_off) {
    throw std::invalid_argument("config error: --lattice conflicts with --no-lattice");
  }
  if (opt.lattice_on) cfg.use_lattice = true;
  if (opt.lattice_off) cfg.use_lattice = false;
  if (opt.force_materialized) cfg.force_materialized = true;
  if (cfg.n == 0) {
    throw std::invalid_argument("config error: missing required field \"n\"");
  }
  if (cfg.replicates == 0) {
    throw std::invalid_argument("config error: missing required field \"replicates\"");
  }
  return cfg;
}

int cmd_analytics(std::uint64_t n, double p_opt, double gamma, const std::string& table,
                  const std::string& out_dir) {
  double p = p_opt;
  if (p < 0.0) {
    if (gamma <= 0.0) {
      throw std::invalid_argument("config error: provide exactly one of --p or --gamma");
    }
    p = std::pow(static_cast<double>(n), -gamma);
  } else if (gamma > 0.0) {
    throw std::invalid_argument("config error: provide exactly one of --p or --gamma");
  }
  if (!table.empty()) {
    double t0 = 0.0;
    double t1 = 0.0;
    double dt = 0.0;
    if (std::sscanf(table.c_str(), "%lf,%lf,%lf", &t0, &t1, &dt) != 3 || dt <= 0.0 ||
        t1 < t0) {
      throw std::invalid_argument(
          "config error: --table expects t0,t1,dt with dt > 0 and t1 >= t0");
    }
    if (p <= 0.0 || p >= 1.0) {
      throw std::invalid_argument("config error: --table requires 0 < p < 1");
    }
    std::ostringstream csv;
    csv << "t,pi_tilde,pi1,objective\n";
    double nd = static_cast<double>(n);
    double lq = std::log1p(-p);
    // Inclusive grid; half-step slack absorbs accumulated rounding at t1.
    long steps = static_cast<long>(std::floor((t1 - t0) / dt + 0.5));
    for (long i = 0; i <= steps; ++i) {
      double t = t0 + static_cast<double>(i) * dt;
      double pt = ringburst::pi_tilde(t, p);
      // real-t extension of P{Bin(t,p) >= 2}
      double p1 = 1.0 - std::exp(t * lq) - t * p * std::exp((t - 1.0) * lq);
      double denom = 1.0 - pt;
      double objective = denom > 0.0 ? -(nd * pt - t) / denom
                                     : -std::numeric_limits<double>::infinity();
      char line[128];
      std::snprintf(line, sizeof(line), "%.6f,%.12g,%.12g,%.12g\n", t, pt, p1,
                    objective);
      csv << line;
    }
    std::cout << csv.str();
    if (!out_dir.empty()) {
      fs::create_directories(out_dir);
      write_file(fs::path(out_dir) / "table.csv", csv.str());
    }
    return kExitOk;
  }
  ringburst::AnalyticProfile profile = ringburst::thresholds(static_cast<double>(n), p);
  std::string body = profile.to_json();
  std::cout << body;
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "analytics.json", body);
  }
  return kExitOk;
}

int cmd_simulate(const SimOptions& opt, const std::string& out_dir) {
  ringburst::ExperimentConfig cfg = build_config(opt);
  ringburst::ExperimentReport report = ringburst::run_experiment(cfg);
  std::cout << report.summary_json();
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "report.csv", report.to_csv());
    write_file(fs::path(out_dir) / "summary.json", report.summary_json());
    write_file(fs::path(out_dir) / "manifest.json", report.manifest_json());
  }
  return kExitOk;
}

int cmd_phases_trace(const SimOptions& opt, std::uint32_t replicate, bool full_trajectory,
                     const std::string& out_dir) {
  ringburst::ExperimentConfig cfg = build_config(opt);
  ringburst::PhaseTrace trace = ringburst::replay_replicate(cfg, replicate, full_trajectory);
  std::string body = trace.to_json();
  std::cout << body;
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "trace.json", body);
  }
  return kExitOk;
}

int cmd_sweep(std::uint64_t n, double p_opt, double gamma, const std::string& y_spec,
              std::uint32_t replicates, std::uint64_t seed, bool lattice, double bstar,
              const std::string& out_dir) {
  double p = p_opt;
  if (p < 0.0) {
    if (gamma <= 0.0) {
      throw std::invalid_argument("config error: provide exactly one of --p or --gamma");
    }
    p = std::pow(static_cast<double>(n), -gamma);
  } else if (gamma > 0.0) {
    throw std::invalid_argument("config error: provide exactly one of --p or --gamma");
  }
  double y0 = 0.0;
  double y1 = 0.0;
  double dy = 0.0;
  if (std::sscanf(y_spec.c_str(), "%lf,%lf,%lf", &y0, &y1, &dy) != 3 || dy <= 0.0 ||
      y1 < y0) {
    throw std::invalid_argument(
        "config error: --y expects y0,y1,dy with dy > 0 and y1 >= y0");
  }
  std::vector<double> grid;
  long steps = static_cast<long>(std::floor((y1 - y0) / dy + 0.5));
  for (long i = 0; i <= steps; ++i) {
    grid.push_back(y0 + static_cast<double>(i) * dy);
  }
  std::vector<ringburst::WindowPoint> points =
      ringburst::critical_window_scan(n, p, grid, replicates, seed, lattice, bstar);
  std::ostringstream csv;
  csv << "y,A0,frequency,ci_lo,ci_hi,phi,isotonic_violation\n";
  for (const ringburst::WindowPoint& pt : points) {
    char line[160];
    std::snprintf(line, sizeof(line), "%.6f,%llu,%.12g,%.12g,%.12g,%.12g,%d\n", pt.y,
                  static_cast<unsigned long long>(pt.A0), pt.frequency, pt.ci.lo, pt.ci.hi,
                  pt.phi_y, pt.isotonic_violation ? 1 : 0);
    csv << line;
  }
  std::cout << csv.str();
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "sweep.csv", csv.str());
  }
  return kExitOk;
}

int cmd_verify(const std::string& preset) {
  std::vector<ringburst::CheckResult> checks = ringburst::run_verify_preset(preset);
  int failed = 0;
  for (const ringburst::CheckResult& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) {
      std::cout << " — " << c.detail;
    }
    std::cout << "\n";
    if (!c.pass) {
      ++failed;
    }
  }
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringburst: bootstrap percolation on a ring lattice superposed with random edges"};
  app.require_subcommand(1);

  // analytics
  auto* analytics = app.add_subcommand(
      "analytics", "print analytic thresholds, or a t/pi_tilde/objective table");
  std::uint64_t an_n = 0;
  double an_p = -1.0;
  double an_gamma = -1.0;
  std::string an_table;
  std::string an_out;
  analytics->add_option("--n", an_n, "number of vertices")->required();
  analytics->add_option("--p", an_p, "random-edge probability");
  analytics->add_option("--gamma", an_gamma, "set p = n^-gamma");
  analytics->add_option("--table", an_table, "emit a CSV over t: t0,t1,dt");
  analytics->add_option("--out", an_out, "directory for output files");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "run a Monte Carlo experiment");
  SimOptions sim_opt;
  add_sim_options(simulate, sim_opt);
  std::string sim_out;
  simulate->add_option("--out", sim_out, "directory for report.csv/summary.json/manifest.json");

  // phases-trace
  auto* ptrace = app.add_subcommand(
      "phases-trace", "replay one replicate and print its phase decomposition");
  SimOptions tr_opt;
  add_sim_options(ptrace, tr_opt);
  std::uint32_t tr_replicate = 0;
  bool tr_full = false;
  std::string tr_out;
  ptrace->add_option("--replicate", tr_replicate, "replicate index to replay");
  ptrace->add_flag("--full-trajectory", tr_full, "include per-step active counts");
  ptrace->add_option("--out", tr_out, "directory for trace.json");

  // sweep
  auto* sweep = app.add_subcommand(
      "sweep", "scan initial sizes a_c* + y*sqrt(a_c) over a grid of y");
  std::uint64_t sw_n = 0;
  double sw_p = -1.0;
  double sw_gamma = -1.0;
  std::string sw_y = "-6,6,1";
  std::uint32_t sw_reps = 100;
  std::uint64_t sw_seed = 1;
  bool sw_lattice = false;
  double sw_bstar = -1.0;
  std::string sw_out;
  sweep->add_option("--n", sw_n, "number of vertices")->required();
  sweep->add_option("--p", sw_p, "random-edge probability");
  sweep->add_option("--gamma", sw_gamma, "set p = n^-gamma");
  sweep->add_option("--y", sw_y, "grid spec y0,y1,dy");
  sweep->add_option("--replicates", sw_reps, "replicates per grid point");
  sweep->add_option("--seed", sw_seed, "master seed");
  sweep->add_flag("--lattice", sw_lattice, "include the ring lattice (off by default)");
  sweep->add_option("--bstar", sw_bstar, "almost-percolation slack b*");
  sweep->add_option("--out", sw_out, "directory for sweep.csv");

  // verify
  auto* verify = app.add_subcommand("verify", "run a named verification preset");
  std::string vf_preset;
  verify->add_option("preset", vf_preset, "preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help and friends
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (analytics->parsed()) {
      return cmd_analytics(an_n, an_p, an_gamma, an_table, an_out);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim_opt, sim_out);
    }
    if (ptrace->parsed()) {
      return cmd_phases_trace(tr_opt, tr_replicate, tr_full, tr_out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sw_n, sw_p, sw_gamma, sw_y, sw_reps, sw_seed, sw_lattice, sw_bstar,
                       sw_out);
    }
    if (verify->parsed()) {
      return cmd_verify(vf_preset);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
