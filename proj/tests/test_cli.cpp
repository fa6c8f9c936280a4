#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

const std::string& binary_path() {
  static const std::string path = [] {
    const char* env = std::getenv("RINGBURST_BIN");
    REQUIRE_MESSAGE(env != nullptr, "RINGBURST_BIN must point at the CLI binary");
    return std::string(env);
  }();
  return path;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + "\"" + binary_path() + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("ringburst_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << text;
  REQUIRE(out.good());
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("analytics prints the threshold profile") {
  RunResult r = run_cli("analytics --n 10000 --p 0.01");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"t_c\": 1.0") != std::string::npos);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["a_c"] == 0.5);
  CHECK(j.contains("a_c_star"));
  CHECK(j.contains("b_c"));
}

TEST_CASE("analytics rejects an out-of-range probability") {
  RunResult r = run_cli("analytics --n 10000 --p 1.5");
  CHECK(r.exit_code == 2);
  RunResult both = run_cli("analytics --n 10000 --p 0.01 --gamma 0.5");
  CHECK(both.exit_code == 2);
  RunResult neither = run_cli("analytics --n 10000");
  CHECK(neither.exit_code == 2);
}

TEST_CASE("analytics emits an inclusive activation table") {
  RunResult r = run_cli("analytics --n 10000 --p 0.01 --table 0,12,0.01");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("t,pi_tilde,pi1,objective\n", 0) == 0);
  CHECK(count_lines(r.output) == 1202);  // header + 1201 grid rows
  // the first row sits at t = 0 where both activation laws vanish
  const auto eol = r.output.find('\n');
  const auto second = r.output.find('\n', eol + 1);
  CHECK(r.output.substr(eol + 1, second - eol - 1) == "0.000000,0,0,-0");
}

TEST_CASE("simulate writes the golden single-replicate report") {
  write_file("golden.json", R"({
    "n": 10,
    "p": 0.0,
    "forced_seeds": [1, 3, 5, 7, 9],
    "replicates": 1,
    "master_seed": 1
  })");
  fs::path out = work_dir() / "golden_out";
  fs::create_directories(out);
  RunResult r = run_cli("simulate --config " + (work_dir() / "golden.json").string() +
                        " --out " + out.string());
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["aggregates"]["freq_full"] == 1.0);
  CHECK(read_file(out / "report.csv") ==
        "replicate,n,p,A0,A_star,K,T_total,percolated_almost,percolated_fully\n"
        "0,10,0,5,10,2,10,1,1\n");
  auto summary = nlohmann::json::parse(read_file(out / "summary.json"));
  CHECK(summary["A0_count"] == 5);

  // a manifest is a runnable config: the rerun reproduces the report bytes
  fs::path out2 = work_dir() / "golden_rerun";
  fs::create_directories(out2);
  RunResult r2 = run_cli("simulate --config " + (out / "manifest.json").string() +
                         " --out " + out2.string());
  CHECK(r2.exit_code == 0);
  CHECK(read_file(out2 / "report.csv") == read_file(out / "report.csv"));
}

TEST_CASE("simulate rejects a config with no population size") {
  write_file("missing_n.json", R"({"p": 0.1, "replicates": 1})");
  RunResult r =
      run_cli("simulate --config " + (work_dir() / "missing_n.json").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("missing required field \"n\"") != std::string::npos);
}

TEST_CASE("command line overrides replace config fields") {
  write_file("base.json", R"({"n": 400, "p": 0.02, "replicates": 6, "master_seed": 4})");
  RunResult a = run_cli("simulate --config " + (work_dir() / "base.json").string());
  RunResult b = run_cli("simulate --config " + (work_dir() / "base.json").string() +
                        " --replicates 9");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(nlohmann::json::parse(a.output)["replicates"] == 6);
  CHECK(nlohmann::json::parse(b.output)["replicates"] == 9);
  RunResult c = run_cli("simulate --n 400 --p 0.02 --replicates 3 --seed 4");
  CHECK(c.exit_code == 0);
  CHECK(nlohmann::json::parse(c.output)["n"] == 400);
}

TEST_CASE("worker count never changes the report bytes") {
  write_file("det.json", R"({"n": 1500, "p": 0.01, "replicates": 10, "master_seed": 12})");
  fs::path o1 = work_dir() / "det1";
  fs::path o2 = work_dir() / "det2";
  fs::create_directories(o1);
  fs::create_directories(o2);
  const std::string cfg_arg = (work_dir() / "det.json").string();
  RunResult r1 = run_cli("simulate --config " + cfg_arg + " --out " + o1.string(),
                         "RINGBURST_WORKERS=1 ");
  RunResult r2 = run_cli("simulate --config " + cfg_arg + " --out " + o2.string(),
                         "RINGBURST_WORKERS=5 ");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(read_file(o1 / "report.csv") == read_file(o2 / "report.csv"));
  CHECK(read_file(o1 / "summary.json") == read_file(o2 / "summary.json"));
}

TEST_CASE("phases-trace replays one replicate as JSON") {
  write_file("trace.json", R"({
    "n": 6,
    "p": 0.0,
    "forced_seeds": [1, 3, 5],
    "replicates": 2,
    "master_seed": 1
  })");
  const std::string cfg_arg = (work_dir() / "trace.json").string();
  RunResult r = run_cli("phases-trace --config " + cfg_arg + " --replicate 0");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["K"] == 2);
  CHECK(j["T_total"] == 6);
  CHECK(j["A_star"] == 6);
  CHECK_FALSE(j["phases"][0].contains("trajectory"));

  RunResult full = run_cli("phases-trace --config " + cfg_arg +
                           " --replicate 0 --full-trajectory");
  CHECK(full.exit_code == 0);
  auto jf = nlohmann::json::parse(full.output);
  REQUIRE(jf["phases"][0].contains("trajectory"));
  CHECK(jf["phases"][0]["trajectory"].size() ==
        jf["phases"][0]["T_k"].get<std::uint64_t>() + 1);

  RunResult oob = run_cli("phases-trace --config " + cfg_arg + " --replicate 7");
  CHECK(oob.exit_code == 2);
}

TEST_CASE("phases-trace agrees with the simulate report") {
  write_file("pair.json", R"({"n": 300, "p": 0.03, "replicates": 3, "master_seed": 21})");
  fs::path out = work_dir() / "pair_out";
  fs::create_directories(out);
  const std::string cfg_arg = (work_dir() / "pair.json").string();
  RunResult sim = run_cli("simulate --config " + cfg_arg + " --out " + out.string());
  CHECK(sim.exit_code == 0);
  RunResult tr = run_cli("phases-trace --config " + cfg_arg + " --replicate 1");
  CHECK(tr.exit_code == 0);
  auto j = nlohmann::json::parse(tr.output);

  const std::string csv = read_file(out / "report.csv");
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t nl = csv.find('\n', pos);
    lines.push_back(csv.substr(pos, nl - pos));
    pos = nl + 1;
  }
  REQUIRE(lines.size() == 4);
  const std::string& row1 = lines[2];
  std::vector<std::string> fields;
  pos = 0;
  while (true) {
    std::size_t comma = row1.find(',', pos);
    fields.push_back(row1.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  REQUIRE(fields.size() == 9);
  CHECK(std::to_string(j["A_star"].get<std::uint64_t>()) == fields[4]);
  CHECK(std::to_string(j["K"].get<std::uint64_t>()) == fields[5]);
  CHECK(std::to_string(j["T_total"].get<std::uint64_t>()) == fields[6]);
}

TEST_CASE("sweep prints a window scan as CSV") {
  RunResult r = run_cli("sweep --n 500 --p 0.02 --y=-1,1,1 --replicates 20 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("y,A0,frequency,ci_lo,ci_hi,phi,isotonic_violation\n", 0) == 0);
  CHECK(count_lines(r.output) == 4);  // header + y in {-1, 0, 1}
}

TEST_CASE("verify runs a preset and reports pass lines") {
  RunResult r = run_cli("verify recursion");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS]") != std::string::npos);
  RunResult bogus = run_cli("verify no-such-preset");
  CHECK(bogus.exit_code == 2);
}

TEST_CASE("usage and parse errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("analytics --help").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("simulate --config /no/such/file.json").exit_code == 2);
  CHECK(run_cli("simulate").exit_code == 2);  // no n anywhere
}
