#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "slicesim/harness/keytool.hpp"
#include "slicesim/harness/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

void print_summary(const slicesim::harness::RunResult& result) {
  auto show = [](const char* label, const std::string& path) {
    if (!path.empty()) std::printf("%-10s %s\n", label, path.c_str());
  };
  show("kpi:", result.kpi_csv);
  show("cpu:", result.cpu_csv);
  show("amf log:", result.amf_log);
  show("alerts:", result.alerts_csv);
  for (const auto& [key, value] : result.summary) {
    std::printf("  %-32s %.6g\n", key.c_str(), value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic 5G SA registration and slice-allocation "
               "simulator with a rogue gNodeB"};
  app.require_subcommand(1);

  std::string scenario_path, out_dir = "out", params_path;
  std::string kpi_path, log_path;
  bool svg = false, trace = false;
  std::uint64_t seed = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario = true) {
    if (needs_scenario) {
      cmd->add_option("--scenario", scenario_path, "scenario file")
          ->required();
    }
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--seed", seed, "seed override")
        ->each([&](const std::string&) { seed_set = true; });
    cmd->add_flag("--svg", svg, "also emit SVG charts");
    cmd->add_flag("--trace", trace, "emit a NAS PDU hex trace log");
  };

  CLI::App* baseline =
      app.add_subcommand("baseline", "benign per-slice QoS profiling run");
  add_common(baseline);
  CLI::App* stealth = app.add_subcommand(
      "stealth", "SD-erasure attack with benign-twin log diff");
  add_common(stealth);
  CLI::App* contaminate = app.add_subcommand(
      "contaminate", "crowd-redirection sweep against one slice");
  add_common(contaminate);
  CLI::App* detect = app.add_subcommand(
      "detect", "re-run detectors over recorded KPI CSV and AMF log");
  add_common(detect);
  detect->add_option("--kpi", kpi_path, "recorded KPI CSV");
  detect->add_option("--log", log_path, "recorded AMF log")->required();
  CLI::App* derive =
      app.add_subcommand("derive-key", "print the NAS key-derivation chain");
  derive->add_option("--params", params_path, "key=value parameter file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    using namespace slicesim::harness;
    RunOptions opts;
    opts.out_dir = out_dir;
    opts.svg = svg;
    opts.trace = trace;
    if (seed_set) opts.seed_override = seed;

    if (derive->parsed()) {
      for (const auto& line : derive_key_report(
               parse_keytool_params(params_path))) {
        std::printf("%s\n", line.c_str());
      }
      return kExitOk;
    }

    Scenario scenario = load_scenario(scenario_path);
    RunResult result;
    if (baseline->parsed()) {
      result = run_baseline(scenario, opts);
    } else if (stealth->parsed()) {
      result = run_stealth(scenario, opts);
    } else if (contaminate->parsed()) {
      result = run_contamination(scenario, opts);
    } else if (detect->parsed()) {
      result = run_detect(scenario, kpi_path, log_path, opts);
    }
    print_summary(result);
    return kExitOk;
  } catch (const slicesim::harness::ScenarioError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return e.kind() == slicesim::harness::ScenarioError::Kind::Validation ||
                   e.kind() == slicesim::harness::ScenarioError::Kind::Parse
               ? kExitValidation
               : kExitRuntime;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
}
