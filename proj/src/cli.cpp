#include "subdamp/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "subdamp/analysis.hpp"
#include "subdamp/characteristics.hpp"
#include "subdamp/companions.hpp"
#include "subdamp/config.hpp"
#include "subdamp/hyperbolic.hpp"
#include "subdamp/numerics.hpp"
#include "subdamp/oracle.hpp"
#include "subdamp/presets.hpp"
#include "subdamp/snapshot.hpp"

namespace subdamp {

namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig config_from_options(const std::string& config_path,
                              const std::string& preset_name,
                              long long coarse) {
  if (config_path.empty() == preset_name.empty())
    throw std::runtime_error("pass exactly one of --config or --preset");
  RunConfig cfg = config_path.empty() ? preset_config(preset_name)
                                      : parse_config(read_text_file(config_path));
  if (coarse > 1) apply_coarse(cfg, coarse);
  return cfg;
}

RunRecord dispatch_run(const RunConfig& cfg) {
  switch (cfg.model) {
    case Model::conservation:
      return run_conservation(cfg);
    case Model::viscous:
      return run_viscous(cfg);
    case Model::wave:
      return run_wave(cfg);
    case Model::nls:
      return run_nls(cfg);
  }
  throw std::logic_error("unreachable model");
}

std::string model_name(Model m) {
  switch (m) {
    case Model::conservation: return "conservation";
    case Model::viscous: return "viscous";
    case Model::wave: return "wave";
    case Model::nls: return "nls";
  }
  return "?";
}

void add_run_command(CLI::App& app) {
  auto* run = app.add_subcommand(
      "run", "Integrate a model and write the record to a directory");
  run->require_subcommand(1);
  for (const char* name :
       {"conservation", "viscous", "wave", "nls"}) {
    auto* sub = run->add_subcommand(
        name, std::string("Run the ") + name + " solver");
    auto config_path = std::make_shared<std::string>();
    auto preset_name = std::make_shared<std::string>();
    auto out_dir = std::make_shared<std::string>();
    auto coarse = std::make_shared<long long>(1);
    sub->add_option("--config", *config_path, "Config file (key = value)");
    sub->add_option("--preset", *preset_name, "Named preset");
    sub->add_option("--coarse", *coarse,
                    "Divide grid.n and multiply dt by this factor")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", *out_dir, "Output record directory")->required();
    const std::string sub_name = name;
    sub->callback([config_path, preset_name, out_dir, coarse, sub_name]() {
      RunConfig cfg = config_from_options(*config_path, *preset_name, *coarse);
      if (model_name(cfg.model) != sub_name)
        throw std::runtime_error("config model '" + model_name(cfg.model) +
                                 "' does not match subcommand '" + sub_name +
                                 "'");
      const RunRecord record = dispatch_run(cfg);
      write_record(*out_dir, record);
      std::cout << "wrote record to " << *out_dir << " ("
                << record.series.begin()->second.t.size()
                << " series samples)\n";
    });
  }
}

void add_trace_command(CLI::App& app) {
  auto* trace = app.add_subcommand(
      "trace", "Integrate characteristic paths through a recorded run");
  auto record_dir = std::make_shared<std::string>();
  auto seeds_text = std::make_shared<std::string>(std::string("8"));
  auto out_path = std::make_shared<std::string>();
  auto start_time = std::make_shared<double>(0.0);
  trace->add_option("--record", *record_dir, "Record directory")->required();
  trace->add_option("--seeds", *seeds_text,
                    "Seed count (uniform) or comma-separated positions");
  trace->add_option("--t0", *start_time,
                    "Start from the first snapshot at or after this time");
  trace->add_option("--out", *out_path, "Output CSV path")->required();
  trace->callback([record_dir, seeds_text, out_path, start_time]() {
    const RunRecord record = load_record(*record_dir);
    std::vector<double> seeds;
    if (seeds_text->find(',') == std::string::npos &&
        seeds_text->find('.') == std::string::npos) {
      const long long n = parse_int_strict(*seeds_text);
      if (n < 1) throw std::runtime_error("--seeds count must be >= 1");
      for (long long i = 0; i < n; ++i)
        seeds.push_back(record.config.origin +
                        record.config.length * (static_cast<double>(i) + 0.5) /
                            static_cast<double>(n));
    } else {
      std::stringstream ss(*seeds_text);
      std::string tok;
      while (std::getline(ss, tok, ','))
        seeds.push_back(parse_double_strict(tok));
    }
    const CharacteristicBundle bundle = trace_bundle(record, seeds, *start_time);
    std::ofstream out(*out_path);
    if (!out) throw std::runtime_error("cannot open '" + *out_path + "'");
    out << bundle_to_csv(bundle);
    std::cout << "wrote " << bundle.paths.size() << " paths ("
              << (bundle.paths.empty() ? 0 : bundle.paths.front().t.size())
              << " samples each), ordered = "
              << (paths_stay_ordered(bundle) ? "yes" : "no") << "\n";
  });
}

void add_oracle_command(CLI::App& app) {
  auto* oracle = app.add_subcommand(
      "oracle",
      "Semi-analytic report for a constant-datum windowed-damping config");
  auto config_path = std::make_shared<std::string>();
  auto preset_name = std::make_shared<std::string>();
  auto out_dir = std::make_shared<std::string>();
  oracle->add_option("--config", *config_path, "Config file");
  oracle->add_option("--preset", *preset_name, "Named preset");
  oracle->add_option("--out", *out_dir,
                     "Directory for report.txt and curve.csv (default: stdout)");
  oracle->callback([config_path, preset_name, out_dir]() {
    const RunConfig cfg = config_from_options(*config_path, *preset_name, 1);
    const OracleInput in = oracle_input_from_config(cfg);
    const OracleReport report = build_oracle_report(in);
    const std::string text = format_oracle_report(report);
    if (out_dir->empty()) {
      std::cout << text;
      return;
    }
    std::filesystem::create_directories(*out_dir);
    {
      std::ofstream out(*out_dir + "/report.txt");
      if (!out) throw std::runtime_error("cannot open report.txt");
      out << text;
    }
    {
      std::ofstream out(*out_dir + "/curve.csv");
      if (!out) throw std::runtime_error("cannot open curve.csv");
      out << "t,x\n";
      for (const CurvePoint& p : report.curve)
        out << format_g17(p.t) << ',' << format_g17(p.x) << '\n';
    }
    std::cout << "wrote oracle report to " << *out_dir << "\n";
  });
}

void add_analyze_command(CLI::App& app) {
  auto* analyze =
      app.add_subcommand("analyze", "Named checks over a record directory");
  auto record_dir = std::make_shared<std::string>();
  auto checks_text = std::make_shared<std::string>(std::string("extinction"));
  analyze->add_option("--record", *record_dir, "Record directory")->required();
  analyze->add_option(
      "--checks", *checks_text,
      "Comma-separated: extinction, sup_rate, exp_rate, zero_gap_final, "
      "monotone, velocity_extinction, freeze, energy_decay, mass_conserved, "
      "mass_decay");
  analyze->callback([record_dir, checks_text]() {
    const RunRecord record = load_record(*record_dir);
    std::vector<std::string> checks;
    std::stringstream ss(*checks_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) checks.push_back(tok);
    std::cout << analyze_record(record, checks);
  });
}

void add_sweep_command(CLI::App& app) {
  auto* sweep = app.add_subcommand(
      "sweep", "Run several configs concurrently into sibling directories");
  auto config_paths = std::make_shared<std::vector<std::string>>();
  auto out_dir = std::make_shared<std::string>();
  sweep->add_option("--config", *config_paths, "Config file (repeatable)")
      ->required()
      ->expected(-1);
  sweep->add_option("--out", *out_dir, "Parent output directory")->required();
  sweep->callback([config_paths, out_dir]() {
    std::vector<RunConfig> cfgs;
    std::vector<std::string> dirs;
    for (const std::string& path : *config_paths) {
      cfgs.push_back(parse_config(read_text_file(path)));
      dirs.push_back(*out_dir + "/" +
                     std::filesystem::path(path).stem().string());
    }
    std::vector<std::string> errors(cfgs.size());
    std::vector<std::thread> workers;
    workers.reserve(cfgs.size());
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
      workers.emplace_back([&, i]() {
        try {
          write_record(dirs[i], dispatch_run(cfgs[i]));
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      });
    }
    for (std::thread& w : workers) w.join();
    bool failed = false;
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
      if (errors[i].empty()) {
        std::cout << "ok   " << dirs[i] << "\n";
      } else {
        failed = true;
        std::cout << "fail " << dirs[i] << ": " << errors[i] << "\n";
      }
    }
    if (failed) throw std::runtime_error("sweep: at least one run failed");
  });
}

void add_presets_command(CLI::App& app) {
  auto* presets =
      app.add_subcommand("presets", "List the built-in experiment presets");
  auto show = std::make_shared<std::string>();
  presets->add_option("--show", *show, "Print the named preset's config text");
  presets->callback([show]() {
    if (!show->empty()) {
      std::cout << find_preset(*show).text;
      return;
    }
    for (const Preset& p : all_presets())
      std::cout << p.name << "\n    " << p.summary << "\n";
  });
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "subdamp: scalar conservation laws (and viscous/wave/Schroedinger "
      "companions) with localized sublinear damping, plus a semi-analytic "
      "oracle for the constant-datum problem"};
  app.require_subcommand(1);
  add_run_command(app);
  add_trace_command(app);
  add_oracle_command(app);
  add_analyze_command(app);
  add_sweep_command(app);
  add_presets_command(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace subdamp
