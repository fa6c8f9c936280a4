#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ringburst/montecarlo.hpp"

namespace ringburst {
namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const char* mode_name(InitialMode m) {
  switch (m) {
    case InitialMode::Count: return "count";
    case InitialMode::AlphaOfAc: return "alpha";
    case InitialMode::WindowOffset: return "window";
  }
  throw std::invalid_argument("unknown initial mode");
}

InitialMode mode_from_name(const std::string& s) {
  if (s == "count") return InitialMode::Count;
  if (s == "alpha") return InitialMode::AlphaOfAc;
  if (s == "window") return InitialMode::WindowOffset;
  throw std::invalid_argument(
      "config error: field \"initial.mode\" must be one of count|alpha|window");
}

nlohmann::ordered_json config_obj(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  if (cfg.p >= 0.0) j["p"] = cfg.p;
  if (cfg.p < 0.0 && cfg.gamma > 0.0) j["gamma"] = cfg.gamma;
  j["dim"] = cfg.dim;
  j["initial"] = {{"mode", mode_name(cfg.initial.mode)}, {"value", cfg.initial.value}};
  if (!cfg.forced_seeds.empty()) j["forced_seeds"] = cfg.forced_seeds;
  j["replicates"] = cfg.replicates;
  j["master_seed"] = cfg.master_seed;
  j["use_lattice"] = cfg.use_lattice;
  if (cfg.almost_threshold >= 0.0) j["almost_threshold"] = cfg.almost_threshold;
  j["r"] = cfg.r;
  if (cfg.workers != 0) j["workers"] = cfg.workers;
  if (cfg.force_materialized) j["force_materialized"] = true;
  return j;
}

}  // namespace

namespace detail {

void compute_aggregates(ExperimentReport& rep) {
  rep.agg = Aggregates{};
  const std::size_t R = rep.rows.size();
  if (R == 0) return;
  std::vector<double> a_star;
  a_star.reserve(R);
  std::uint64_t hits_almost = 0, hits_full = 0;
  double k_sum = 0.0;
  for (const auto& row : rep.rows) {
    a_star.push_back(static_cast<double>(row.A_star));
    hits_almost += row.percolated_almost;
    hits_full += row.percolated_fully;
    k_sum += row.K;
  }
  const MeanVar mva = mean_var(a_star);
  rep.agg.mean_A_star = mva.mean;
  rep.agg.var_A_star = mva.variance;
  if (rep.p > 0.0) {
    const double t_c = 1.0 / (static_cast<double>(rep.cfg.n) * rep.p * rep.p);
    std::vector<double> ratio;
    ratio.reserve(R);
    for (double a : a_star) ratio.push_back(a / t_c);
    const MeanVar mvr = mean_var(ratio);
    rep.agg.mean_ratio_tc = mvr.mean;
    rep.agg.var_ratio_tc = mvr.variance;
  } else {
    rep.agg.mean_ratio_tc = std::numeric_limits<double>::quiet_NaN();
    rep.agg.var_ratio_tc = std::numeric_limits<double>::quiet_NaN();
  }
  rep.agg.ci_almost = wilson_ci(hits_almost, R);
  rep.agg.freq_almost = rep.agg.ci_almost.estimate;
  rep.agg.ci_full = wilson_ci(hits_full, R);
  rep.agg.freq_full = rep.agg.ci_full.estimate;
  rep.agg.mean_K = k_sum / static_cast<double>(R);
}

}  // namespace detail

std::string ExperimentReport::to_csv() const {
  std::string out = "replicate,n,p,A0,A_star,K,T_total,percolated_almost,percolated_fully\n";
  const std::string n_str = std::to_string(cfg.n);
  const std::string p_str = fmt_double(p);
  for (const auto& row : rows) {
    out += std::to_string(row.replicate);
    out += ',';
    out += n_str;
    out += ',';
    out += p_str;
    out += ',';
    out += std::to_string(row.A0);
    out += ',';
    out += std::to_string(row.A_star);
    out += ',';
    out += std::to_string(row.K);
    out += ',';
    out += std::to_string(row.T_total);
    out += ',';
    out += row.percolated_almost ? '1' : '0';
    out += ',';
    out += row.percolated_fully ? '1' : '0';
    out += '\n';
  }
  return out;
}

std::string ExperimentReport::summary_json() const {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["p"] = p;
  j["dim"] = cfg.dim;
  j["replicates"] = cfg.replicates;
  j["master_seed"] = cfg.master_seed;
  j["use_lattice"] = cfg.use_lattice;
  j["r"] = cfg.r;
  j["b_star"] = b_star;
  j["A0_count"] = rows.empty() ? 0 : rows.front().A0;
  nlohmann::ordered_json ja;
  ja["mean_A_star"] = agg.mean_A_star;
  ja["var_A_star"] = agg.var_A_star;
  ja["mean_A_star_over_tc"] = agg.mean_ratio_tc;  // null when p = 0
  ja["var_A_star_over_tc"] = agg.var_ratio_tc;
  ja["freq_almost"] = agg.freq_almost;
  ja["ci_almost"] = {agg.ci_almost.lo, agg.ci_almost.hi};
  ja["freq_full"] = agg.freq_full;
  ja["ci_full"] = {agg.ci_full.lo, agg.ci_full.hi};
  ja["mean_K"] = agg.mean_K;
  j["aggregates"] = ja;
  return j.dump(2) + "\n";
}

std::string ExperimentReport::manifest_json() const {
  nlohmann::ordered_json j;
  j["subcommand"] = "simulate";
  j["config"] = config_obj(cfg);
  nlohmann::ordered_json jr;
  jr["p"] = p;
  jr["b_star"] = b_star;
  jr["A0_count"] = rows.empty() ? 0 : rows.front().A0;
  j["resolved"] = jr;
  j["outputs"] = {"report.csv", "summary.json"};
  return j.dump(2) + "\n";
}

std::string config_to_json(const ExperimentConfig& cfg) {
  return config_obj(cfg).dump(2) + "\n";
}

ExperimentConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config error: invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("config")) j = j.at("config");  // manifest rerun
  if (!j.is_object())
    throw std::invalid_argument("config error: top level must be a JSON object");

  static const std::set<std::string> known = {
      "n",          "p",          "gamma",       "dim",
      "initial",    "forced_seeds", "replicates", "master_seed",
      "use_lattice", "almost_threshold", "r",     "workers",
      "force_materialized"};
  for (const auto& item : j.items())
    if (known.find(item.key()) == known.end())
      throw std::invalid_argument("config error: unknown field \"" + item.key() + "\"");

  auto bad = [](const std::string& f, const std::string& why) -> void {
    throw std::invalid_argument("config error: field \"" + f + "\" " + why);
  };
  auto need = [&](const char* f) {
    if (!j.contains(f))
      throw std::invalid_argument(std::string("config error: missing required field \"") +
                                  f + "\"");
  };
  auto get_uint = [&](const nlohmann::json& v, const std::string& f) -> std::uint64_t {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
      const auto s = v.get<std::int64_t>();
      if (s < 0) bad(f, "must be a nonnegative integer");
      return static_cast<std::uint64_t>(s);
    }
    bad(f, "must be an integer");
    return 0;
  };
  auto get_double = [&](const nlohmann::json& v, const std::string& f) -> double {
    if (!v.is_number()) bad(f, "must be a number");
    return v.get<double>();
  };
  auto get_bool = [&](const nlohmann::json& v, const std::string& f) -> bool {
    if (!v.is_boolean()) bad(f, "must be a boolean");
    return v.get<bool>();
  };

  ExperimentConfig cfg;
  need("n");
  need("replicates");
  cfg.n = static_cast<std::uint32_t>(get_uint(j.at("n"), "n"));
  cfg.replicates = get_uint(j.at("replicates"), "replicates");
  if (j.contains("p")) cfg.p = get_double(j.at("p"), "p");
  if (j.contains("gamma")) cfg.gamma = get_double(j.at("gamma"), "gamma");
  if (j.contains("dim")) cfg.dim = static_cast<std::uint32_t>(get_uint(j.at("dim"), "dim"));
  if (j.contains("master_seed")) cfg.master_seed = get_uint(j.at("master_seed"), "master_seed");
  if (j.contains("use_lattice")) cfg.use_lattice = get_bool(j.at("use_lattice"), "use_lattice");
  if (j.contains("almost_threshold"))
    cfg.almost_threshold = get_double(j.at("almost_threshold"), "almost_threshold");
  if (j.contains("r")) cfg.r = static_cast<std::uint32_t>(get_uint(j.at("r"), "r"));
  if (j.contains("workers"))
    cfg.workers = static_cast<std::uint32_t>(get_uint(j.at("workers"), "workers"));
  if (j.contains("force_materialized"))
    cfg.force_materialized = get_bool(j.at("force_materialized"), "force_materialized");
  if (j.contains("initial")) {
    const auto& ji = j.at("initial");
    if (!ji.is_object()) bad("initial", "must be an object with mode and value");
    for (const auto& item : ji.items())
      if (item.key() != "mode" && item.key() != "value")
        bad("initial." + item.key(), "is not a recognised field");
    if (!ji.contains("mode") || !ji.at("mode").is_string())
      bad("initial.mode", "must be a string");
    cfg.initial.mode = mode_from_name(ji.at("mode").get<std::string>());
    if (!ji.contains("value")) bad("initial.value", "is required");
    cfg.initial.value = get_double(ji.at("value"), "initial.value");
  }
  if (j.contains("forced_seeds")) {
    const auto& js = j.at("forced_seeds");
    if (!js.is_array()) bad("forced_seeds", "must be an array of vertex ids");
    for (const auto& v : js)
      cfg.forced_seeds.push_back(
          static_cast<VertexId>(get_uint(v, "forced_seeds")));
  }
  validate_config(cfg);
  return cfg;
}

}  // namespace ringburst
