#include "abicap/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "abicap/config.hpp"
#include "abicap/error.hpp"
#include "abicap/report.hpp"
#include "abicap/scenarios.hpp"

namespace abicap {

namespace {

std::string scenario_list() {
  std::string s;
  for (ScenarioId id : kAllScenarios) s += (s.empty() ? "" : ", ") + std::string(to_string(id));
  return s;
}

template <typename Write>
void write_file(const std::filesystem::path& path, Write&& write) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  write(file);
  file.close();
  if (!file) {
    throw std::runtime_error("failed writing '" + path.string() + "'");
  }
}

std::string chart_title(const std::string& name) { return "Mean knowledge per step: " + name; }

}  // namespace

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Agent-based simulation of procedural learning under ICAP engagement modes",
               "abicap"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list-scenarios", "Print the built-in scenario ids");

  auto* run = app.add_subcommand("run", "Run a built-in scenario or a config file");
  std::string target;
  std::uint64_t seed = 42;
  std::string out_dir;
  std::vector<std::string> overrides;
  bool plot = false;
  run->add_option("scenario", target, "Scenario id or path to a config file")->required();
  auto* seed_opt = run->add_option("--seed", seed, "Master seed (default 42)");
  run->add_option("--out", out_dir,
                  std::string("Output directory (default $") + kOutDirEnv + " or .)");
  run->add_option("--set", overrides, "Override a parameter, key=value (repeatable)");
  run->add_flag("--plot", plot, "Also render an SVG line chart");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*list) {
    for (ScenarioId id : kAllScenarios) out << to_string(id) << '\n';
    return kExitOk;
  }

  RunConfig config;
  std::string name;
  try {
    if (auto id = parse_scenario(target)) {
      config = make_scenario(*id, seed);
      name = target;
    } else if (std::filesystem::is_regular_file(target)) {
      config = load_config_file(target);
      if (seed_opt->count() > 0) config.master_seed = seed;
      name = std::filesystem::path(target).stem().string();
    } else {
      err << "error: unknown scenario '" << target << "'; valid ids: " << scenario_list()
          << " (or pass a config file path)\n";
      return kExitUsage;
    }
    for (const std::string& o : overrides) apply_override(config, o);
    config.validate();
  } catch (const ConfigError& e) {
    err << "error: " << (e.line() == 0 && !overrides.empty() ? "--set " : "") << e.what()
        << '\n';
    return kExitUsage;
  } catch (const FieldError& e) {
    err << "error: --set " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::filesystem::path dir = out_dir;
    if (dir.empty()) {
      const char* env = std::getenv(kOutDirEnv);
      dir = (env != nullptr && *env != '\0') ? env : ".";
    }
    std::filesystem::create_directories(dir);

    const RunResult result = run_experiment(config);
    const auto csv_path = dir / (name + "_timeseries.csv");
    write_file(csv_path, [&](std::ostream& f) { write_timeseries_csv(name, result, f); });
    out << "wrote " << csv_path.string() << '\n';
    if (config.trace_node) {
      const auto mastery_path = dir / (name + "_mastery.csv");
      write_file(mastery_path, [&](std::ostream& f) { write_mastery_csv(result, f); });
      out << "wrote " << mastery_path.string() << '\n';
    }
    if (plot) {
      const auto svg_path = dir / (name + ".svg");
      const auto rows = timeseries_rows(name, result);
      ChartOptions options;
      options.title = chart_title(name);
      write_file(svg_path, [&](std::ostream& f) { render_line_chart(rows, f, options); });
      out << "wrote " << svg_path.string() << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace abicap
