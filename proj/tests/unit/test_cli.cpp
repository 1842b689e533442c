#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "subdamp/analysis.hpp"
#include "subdamp/cli.hpp"
#include "subdamp/companions.hpp"
#include "subdamp/config.hpp"
#include "subdamp/hyperbolic.hpp"
#include "subdamp/presets.hpp"
#include "subdamp/snapshot.hpp"

using namespace subdamp;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / name;
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

struct CliResult {
  int code = 0;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("subdamp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream captured;
  std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
  int code = 0;
  try {
    code = run_cli(static_cast<int>(argv.size()), argv.data());
  } catch (...) {
    std::cout.rdbuf(old);
    throw;
  }
  std::cout.rdbuf(old);
  return {code, captured.str()};
}

const char* kTinyConfig =
    "model = conservation\n"
    "grid.n = 100\n"
    "grid.origin = 0\n"
    "grid.length = 1\n"
    "flux = burgers\n"
    "damping.delta = 1\n"
    "damping.alpha = 1\n"
    "damping.omega = 0,0.25\n"
    "dt = 1e-3\n"
    "t_final = 0.05\n"
    "u0 = constant\n"
    "u0.value = 1.25\n"
    "snapshot.every = 0.01\n";

std::string write_config(const fs::path& dir, const std::string& name,
                         const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream out(p);
  out << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("presets subcommand lists every preset with a summary") {
  const CliResult res = cli({"presets"});
  REQUIRE(res.code == 0);
  for (const std::string& name : preset_names())
    CHECK(res.out.find(name) != std::string::npos);
  CHECK(preset_names().size() == 8);

  const CliResult shown = cli({"presets", "--show", "burgers-window"});
  REQUIRE(shown.code == 0);
  CHECK(shown.out.find("model = conservation") != std::string::npos);
  CHECK(shown.out.find("flux = burgers") != std::string::npos);
  // The shown text is a parseable config.
  CHECK_NOTHROW((void)parse_config(shown.out));

  const CliResult missing = cli({"presets", "--show", "no-such-preset"});
  CHECK(missing.code != 0);
}

TEST_CASE("run subcommand validates its option combinations") {
  // Missing --out is a parse error.
  CHECK(cli({"run", "conservation", "--preset", "burgers-window"}).code != 0);
  // Config and preset are mutually exclusive, one is required.
  const fs::path dir = fresh_dir("subdamp_t_cli_opts");
  CHECK(cli({"run", "conservation", "--out", (dir / "r").string()}).code != 0);
  // The model subcommand must match the config's model.
  CHECK(cli({"run", "viscous", "--preset", "burgers-window", "--out",
             (dir / "r").string()})
            .code != 0);
  fs::remove_all(dir);
}

TEST_CASE("run, analyze, and trace round-trip through a record directory") {
  const fs::path dir = fresh_dir("subdamp_t_cli_run");
  const std::string cfg_path = write_config(dir, "tiny.cfg", kTinyConfig);
  const std::string rec_dir = (dir / "rec").string();

  const CliResult run =
      cli({"run", "conservation", "--config", cfg_path, "--out", rec_dir});
  REQUIRE(run.code == 0);
  CHECK(run.out.find("wrote record") != std::string::npos);
  CHECK(fs::exists(fs::path(rec_dir) / "manifest.txt"));

  const CliResult analyze =
      cli({"analyze", "--record", rec_dir, "--checks", "extinction,monotone"});
  REQUIRE(analyze.code == 0);
  CHECK(analyze.out.find("extinction.time") != std::string::npos);
  CHECK(analyze.out.find("monotone.pass = 1") != std::string::npos);

  const std::string csv_path = (dir / "paths.csv").string();
  const CliResult trace = cli({"trace", "--record", rec_dir, "--seeds", "5",
                               "--t0", "0.02", "--out", csv_path});
  REQUIRE(trace.code == 0);
  CHECK(trace.out.find("5 paths") != std::string::npos);
  CHECK(trace.out.find("ordered = yes") != std::string::npos);
  const std::string csv = slurp(csv_path);
  CHECK(csv.rfind("seed_id,t,x", 0) == 0);
  // Starting at t0 = 0.02 drops the first two snapshots (0.00 and 0.01).
  CHECK(csv.find("0,0.02,") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("repeat runs of the same config are byte-identical") {
  const fs::path dir = fresh_dir("subdamp_t_cli_det");
  const std::string cfg_path = write_config(dir, "tiny.cfg", kTinyConfig);
  const std::string rec1 = (dir / "rec1").string();
  const std::string rec2 = (dir / "rec2").string();
  REQUIRE(cli({"run", "conservation", "--config", cfg_path, "--out", rec1})
              .code == 0);
  REQUIRE(cli({"run", "conservation", "--config", cfg_path, "--out", rec2})
              .code == 0);

  std::vector<fs::path> files1;
  for (const auto& e : fs::directory_iterator(rec1))
    files1.push_back(e.path());
  REQUIRE(!files1.empty());
  for (const fs::path& p1 : files1) {
    const fs::path p2 = fs::path(rec2) / p1.filename();
    REQUIRE(fs::exists(p2));
    CHECK(slurp(p1) == slurp(p2));
  }
  fs::remove_all(dir);
}

TEST_CASE("oracle subcommand prints and writes the report") {
  const CliResult to_stdout = cli({"oracle", "--preset", "burgers-window"});
  REQUIRE(to_stdout.code == 0);
  CHECK(to_stdout.out.find("epsilon = 0.7071067811") != std::string::npos);
  CHECK(to_stdout.out.find("regime = crossing") != std::string::npos);
  CHECK(to_stdout.out.find("n0 = 3") != std::string::npos);

  const fs::path dir = fresh_dir("subdamp_t_cli_oracle");
  const CliResult to_dir = cli(
      {"oracle", "--preset", "burgers-window", "--out", (dir / "o").string()});
  REQUIRE(to_dir.code == 0);
  const std::string report = slurp(dir / "o" / "report.txt");
  CHECK(report.find("t_star_trace = 3.67303260747") != std::string::npos);
  const std::string curve = slurp(dir / "o" / "curve.csv");
  CHECK(curve.rfind("t,x", 0) == 0);
  CHECK(std::count(curve.begin(), curve.end(), '\n') > 10);
  fs::remove_all(dir);

  // The oracle needs a constant-datum single-window conservation config.
  CHECK(cli({"oracle", "--preset", "nls-soliton"}).code != 0);
}

TEST_CASE("sweep runs several configs into sibling directories") {
  const fs::path dir = fresh_dir("subdamp_t_cli_sweep");
  const std::string a = write_config(dir, "a.cfg", kTinyConfig);
  std::string faster = kTinyConfig;
  faster.replace(faster.find("u0.value = 1.25"), 15, "u0.value = 0.75");
  const std::string b = write_config(dir, "b.cfg", faster);
  const std::string out = (dir / "runs").string();

  const CliResult res = cli({"sweep", "--config", a, b, "--out", out});
  REQUIRE(res.code == 0);
  CHECK(res.out.find("ok   " + out + "/a") != std::string::npos);
  CHECK(res.out.find("ok   " + out + "/b") != std::string::npos);
  const RunRecord ra = load_record(out + "/a");
  const RunRecord rb = load_record(out + "/b");
  CHECK(ra.series.at("sup_norm").v.front() == 1.25);
  CHECK(rb.series.at("sup_norm").v.front() == 0.75);

  // A config that fails at run time fails the sweep as a whole, but the
  // good sibling still lands.
  std::string broken = kTinyConfig;
  broken.replace(broken.find("u0 = constant\nu0.value = 1.25"), 29,
                 "u0 = file\nu0.path = /nonexistent/u0.csv");
  const std::string c = write_config(dir, "c.cfg", broken);
  const std::string out2 = (dir / "runs2").string();
  const CliResult bad = cli({"sweep", "--config", a, c, "--out", out2});
  CHECK(bad.code != 0);
  CHECK(bad.out.find("fail " + out2 + "/c") != std::string::npos);
  CHECK(fs::exists(fs::path(out2) / "a" / "manifest.txt"));
  fs::remove_all(dir);
}

TEST_CASE("every preset passes its own expected checks at a coarse factor") {
  // Factors keep each run to seconds while staying on the preset's physics;
  // grid.n stays divisible (and a power of two for the spectral models).
  const std::map<std::string, long long> coarse = {
      {"transport-window", 20}, {"burgers-window", 20},
      {"bl-window-a1", 20},     {"bl-window-a34", 20},
      {"viscous-window", 32},   {"wave-plateau", 6},
      {"nls-soliton", 8},       {"nls-soliton-damped", 8},
  };
  for (const Preset& preset : all_presets()) {
    CAPTURE(preset.name);
    REQUIRE(coarse.count(preset.name) == 1);
    RunConfig cfg = preset_config(preset.name);
    apply_coarse(cfg, coarse.at(preset.name));
    RunRecord record;
    switch (cfg.model) {
      case Model::conservation: record = run_conservation(cfg); break;
      case Model::viscous: record = run_viscous(cfg); break;
      case Model::wave: record = run_wave(cfg); break;
      case Model::nls: record = run_nls(cfg); break;
    }
    REQUIRE(!preset.checks.empty());
    const std::string out = analyze_record(record, preset.checks);
    CAPTURE(out);
    // Every named check reports, and no verdict line fails.
    for (const std::string& check : preset.checks)
      CHECK(out.find(check + ".") != std::string::npos);
    CHECK(out.find(".pass = 0") == std::string::npos);
  }
}
