#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rcrae/inference.hpp"
#include "rcrae/noise.hpp"

namespace rcrae {

enum class Scenario { ScanL, ScanPi, Compare };
enum class ArmSelect { Bare, Rc, Both };
enum class OutputFormat { Csv, Json, Both };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AnsatzSpec {
  enum class Type { H2, Ldca };
  Type type = Type::H2;
  double theta0 = 0.0;                 // h2
  std::array<double, 8> thetas = {};   // ldca
  int num_qubits() const { return type == Type::H2 ? 4 : 2; }
};

struct ExperimentConfig {
  Scenario scenario = Scenario::ScanL;
  AnsatzSpec ansatz;
  std::string observable;
  NoiseConfig noise;
  long long m_shots = 0;
  int lmax = 8;                   // scan_l
  int l_fixed = 1;                // scan_pi
  std::vector<int> lmax_list;     // compare
  int duplicates = 50;            // N
  int b_runs = 64;                // B
  int repeats = 50;
  int sweep_points = 200;         // scan_pi
  GridSpec grid;
  std::optional<double> n_o_override;
  ArmSelect arm = ArmSelect::Both;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
};

/// Parses and validates; throws ConfigError with a field-path message.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config_file(const std::string& path);

/// Flat result table with pre-formatted cells, so CSV and JSON outputs are
/// byte-stable for a fixed (config, seed).
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

ResultTable run_scan_l(const ExperimentConfig& cfg);
ResultTable run_scan_pi(const ExperimentConfig& cfg);
ResultTable run_compare(const ExperimentConfig& cfg);

/// Runs the configured scenario and writes table + manifest into
/// cfg.out_dir. Returns the table.
ResultTable run_scenario(const ExperimentConfig& cfg, const nlohmann::json& raw_config,
                         OutputFormat format = OutputFormat::Both);

int cli_main(int argc, const char* const* argv);

std::string format_double(double v);

}  // namespace rcrae
