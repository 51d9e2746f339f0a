#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rcrae/harness.hpp"

namespace rcrae {

namespace {

struct CommonOpts {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> arm;
  std::string format = "both";
};

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--config", o.config_path, "experiment config file (JSON)")->required();
  sub->add_option("--seed", o.seed, "override the config seed");
  sub->add_option("--out", o.out_dir, "override the output directory");
  sub->add_option("--arm", o.arm, "bare, rc or both")
      ->check(CLI::IsMember({"bare", "rc", "both"}));
  sub->add_option("--format", o.format, "csv, json or both")
      ->check(CLI::IsMember({"csv", "json", "both"}));
}

int run_subcommand(Scenario scenario, const CommonOpts& o) {
  nlohmann::json raw;
  ExperimentConfig cfg;
  try {
    std::ifstream in(o.config_path);
    if (!in) throw ConfigError("config: cannot open '" + o.config_path + "'");
    try {
      in >> raw;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config: parse error in '" + o.config_path + "': " + e.what());
    }
    cfg = parse_config(raw);
    if (cfg.scenario != scenario)
      throw ConfigError("config.scenario: does not match the requested subcommand");
    if (o.seed) cfg.seed = *o.seed;
    if (o.out_dir) cfg.out_dir = *o.out_dir;
    if (o.arm) {
      if (*o.arm == "bare") cfg.arm = ArmSelect::Bare;
      else if (*o.arm == "rc") cfg.arm = ArmSelect::Rc;
      else cfg.arm = ArmSelect::Both;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  OutputFormat fmt = OutputFormat::Both;
  if (o.format == "csv") fmt = OutputFormat::Csv;
  if (o.format == "json") fmt = OutputFormat::Json;

  try {
    run_scenario(cfg, raw, fmt);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"enhanced-sampling simulation and estimation lab"};
  app.require_subcommand(1);

  CommonOpts scan_l_opts, scan_pi_opts, compare_opts;
  std::string validate_path;

  CLI::App* scan_l = app.add_subcommand("scan-l", "p_even vs layer count, with fidelity fit");
  add_common(scan_l, scan_l_opts);
  CLI::App* scan_pi = app.add_subcommand("scan-pi", "p_even vs noiseless expectation sweep");
  add_common(scan_pi, scan_pi_opts);
  CLI::App* compare = app.add_subcommand("compare", "SS vs RAE vs RC-RAE estimation study");
  add_common(compare, compare_opts);
  CLI::App* validate = app.add_subcommand("validate-config", "check a config file");
  validate->add_option("--config", validate_path, "experiment config file (JSON)")->required();
  CLI::App* version = app.add_subcommand("version", "print version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (version->parsed()) {
    std::printf("rcrae %s\n", RCRAE_VERSION);
    return 0;
  }
  if (validate->parsed()) {
    try {
      load_config_file(validate_path);
    } catch (const ConfigError& e) {
      std::fprintf(stderr, "%s\n", e.what());
      return 2;
    }
    std::printf("ok\n");
    return 0;
  }
  if (scan_l->parsed()) return run_subcommand(Scenario::ScanL, scan_l_opts);
  if (scan_pi->parsed()) return run_subcommand(Scenario::ScanPi, scan_pi_opts);
  if (compare->parsed()) return run_subcommand(Scenario::Compare, compare_opts);
  return 2;
}

}  // namespace rcrae
