#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "rcrae/harness.hpp"
#include "rcrae/twirl.hpp"

using namespace rcrae;
namespace fs = std::filesystem;

namespace {

nlohmann::json base_config() {
  return nlohmann::json{
      {"scenario", "scan_l"},
      {"ansatz", {{"type", "h2"}, {"theta0", -6.057}}},
      {"observable", "XXXX"},
      {"m_shots", 9000},
      {"lmax", 2},
      {"n_duplicates", 6},
      {"seed", 11},
  };
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct TempDir {
  fs::path path;
  explicit TempDir(const char* tag) : path(fs::temp_directory_path() / tag) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("config parsing applies defaults") {
  const ExperimentConfig cfg = parse_config(base_config());
  CHECK(cfg.scenario == Scenario::ScanL);
  CHECK(cfg.ansatz.type == AnsatzSpec::Type::H2);
  CHECK(cfg.m_shots == 9000);
  CHECK(cfg.lmax == 2);
  CHECK(cfg.repeats == 50);
  CHECK(cfg.b_runs == 64);
  CHECK(cfg.grid.pi_points == 2001);
  CHECK(cfg.noise.incoherent == false);  // no noise block: noiseless
  CHECK(cfg.noise.coherent == false);
}

TEST_CASE("config errors carry field paths") {
  auto j = base_config();
  j.erase("m_shots");
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("m_shots"), ConfigError);

  j = base_config();
  j["observable"] = "XX";
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("observable"), ConfigError);

  j = base_config();
  j["noise"] = {{"zz_pairs", {{0, 9}}}};
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("zz_pairs[0]"), ConfigError);

  j = base_config();
  j["ansatz"] = {{"type", "ldca"}, {"thetas", {1, 2, 3}}};
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("ansatz.thetas"), ConfigError);

  j = base_config();
  j["scenario"] = "scan_pi";  // h2 fine, but sweep needs h2 + integer fields
  j["sweep_points"] = 2;
  CHECK_THROWS_WITH_AS(parse_config(j), doctest::Contains("sweep_points"), ConfigError);
}

TEST_CASE("noise block parses units and defaults") {
  auto j = base_config();
  j["noise"] = {{"t1_us", 84}, {"t2_us", 110}, {"zz_khz", 45}};
  const ExperimentConfig cfg = parse_config(j);
  CHECK(cfg.noise.t1 == doctest::Approx(84e-6));
  CHECK(cfg.noise.t_step == doctest::Approx(100e-9));
  CHECK(cfg.noise.incoherent);
  CHECK(cfg.noise.coherent);  // implied by nonzero zz
  REQUIRE(cfg.noise.zz_pairs.size() == 3);  // default chain on 4 qubits
  CHECK(cfg.noise.zz_strengths[0] == doctest::Approx(2 * 3.14159265358979 * 45e3));

  j["noise"]["zz_khz"] = 0;
  CHECK(parse_config(j).noise.coherent == false);
}

TEST_CASE("noiseless scan_l fits perfectly") {
  auto j = base_config();
  j["arm"] = "bare";
  const ResultTable t = run_scan_l(parse_config(j));
  REQUIRE(t.columns == std::vector<std::string>{"arm", "L", "p_even_exact", "p_even_sampled",
                                                "f_fit", "r2"});
  REQUIRE(t.rows.size() == 3);  // bare arm, L = 0..2
  for (const auto& row : t.rows) {
    CHECK(row[0] == "bare");
    CHECK(std::abs(std::stod(row[4]) - 1.0) < 1e-6);  // f
    CHECK(std::abs(std::stod(row[5]) - 1.0) < 1e-9);  // r2
  }
}

TEST_CASE("noiseless scan_pi lies on the cosine curve") {
  nlohmann::json j = base_config();
  j["scenario"] = "scan_pi";
  j["sweep_points"] = 12;
  j["l_fixed"] = 1;
  j["n_duplicates"] = 4;
  j["arm"] = "both";
  const ResultTable t = run_scan_pi(parse_config(j));
  REQUIRE(t.columns ==
          std::vector<std::string>{"arm", "theta0", "pi_exact", "p_even", "f_fit", "r2"});
  REQUIRE(t.rows.size() == 24);
  for (const auto& row : t.rows) {
    const double pi_exact = std::stod(row[2]);
    const double p_even = std::stod(row[3]);
    const double model = 0.5 * (1.0 + std::cos(3.0 * std::acos(pi_exact)));
    CHECK(std::abs(p_even - model) < 1e-9);
    CHECK(std::abs(std::stod(row[5]) - 1.0) < 1e-9);
  }
}

TEST_CASE("noiseless compare favours enhanced sampling") {
  nlohmann::json j = base_config();
  j["scenario"] = "compare";
  j["lmax_list"] = {2};
  j["repeats"] = 20;
  j["m_shots"] = 6000;
  j["n_duplicates"] = 4;
  j["b_runs"] = 16;
  j["grid"] = {{"pi_points", 801}, {"f_points", 201}};
  const ResultTable t = run_compare(parse_config(j));
  REQUIRE(t.columns == std::vector<std::string>{"method", "lmax", "mean", "bias", "rmse",
                                                "se_mean", "se_rmse", "runtime_units_a"});
  REQUIRE(t.rows.size() == 3);  // ss, rae, rc-rae
  double ss_rmse = 0, rae_rmse = 0, rc_rmse = 0;
  for (const auto& row : t.rows) {
    const double bias = std::stod(row[3]);
    const double rmse = std::stod(row[4]);
    const double se = std::stod(row[5]);
    CHECK(std::abs(bias) < 4.0 * se + 1e-3);  // unbiased within noise
    if (row[0] == "ss") ss_rmse = rmse;
    if (row[0] == "rae") rae_rmse = rmse;
    if (row[0] == "rc-rae") rc_rmse = rmse;
  }
  CHECK(rae_rmse < ss_rmse);
  CHECK(rc_rmse < ss_rmse);
  // runtime column: ss runs at Lmax = 0 cost
  CHECK(std::stod(t.rows[0][7]) == doctest::Approx(6000));
}

TEST_CASE("shot accounting splits M across circuits") {
  auto j = base_config();
  j["m_shots"] = 10000;
  j["lmax"] = 3;
  const ExperimentConfig cfg = parse_config(j);
  const long long per = cfg.m_shots / (cfg.lmax + 1);
  CHECK(per == 2500);
  const auto shots = allocate_shots(per, cfg.duplicates);
  long long sum = 0;
  for (long long s : shots) sum += s;
  CHECK(sum == per);
}

TEST_CASE("scenario outputs are byte-identical across runs") {
  TempDir d1("rcrae_det_a"), d2("rcrae_det_b");
  auto j = base_config();
  j["n_duplicates"] = 4;
  ExperimentConfig cfg = parse_config(j);

  cfg.out_dir = d1.path.string();
  run_scenario(cfg, j);
  cfg.out_dir = d2.path.string();
  run_scenario(cfg, j);

  CHECK(slurp(d1.path / "scan_l.csv") == slurp(d2.path / "scan_l.csv"));
  CHECK(slurp(d1.path / "scan_l.json") == slurp(d2.path / "scan_l.json"));

  auto m1 = nlohmann::json::parse(slurp(d1.path / "manifest.json"));
  auto m2 = nlohmann::json::parse(slurp(d2.path / "manifest.json"));
  m1.erase("wall_time_s");
  m2.erase("wall_time_s");
  CHECK(m1 == m2);
}

TEST_CASE("csv writer emits the documented schema") {
  ResultTable t;
  t.columns = {"a", "b"};
  t.rows = {{"1", "2"}, {"3", "4"}};
  CHECK(t.to_csv() == "a,b\n1,2\n3,4\n");
  const auto j = t.to_json();
  CHECK(j["columns"].size() == 2);
  CHECK(j["rows"].size() == 2);
}

TEST_CASE("cli exit codes") {
  {
    const char* argv[] = {"rcrae", "version"};
    CHECK(cli_main(2, argv) == 0);
  }
  {
    const char* argv[] = {"rcrae", "validate-config", "--config", "/nonexistent.json"};
    CHECK(cli_main(4, argv) == 2);
  }
  {
    const char* argv[] = {"rcrae", "scan-l", "--bogus-flag"};
    CHECK(cli_main(3, argv) == 2);
  }
  {
    const char* argv[] = {"rcrae"};
    CHECK(cli_main(1, argv) == 2);
  }

  TempDir d("rcrae_cli");
  const fs::path cfg_path = d.path / "cfg.json";
  {
    std::ofstream out(cfg_path);
    auto j = base_config();
    j["n_duplicates"] = 2;
    j["out_dir"] = (d.path / "out").string();
    out << j.dump();
  }
  {
    const std::string cp = cfg_path.string();
    const char* argv[] = {"rcrae", "validate-config", "--config", cp.c_str()};
    CHECK(cli_main(4, argv) == 0);
  }
  {
    const std::string cp = cfg_path.string();
    const char* argv[] = {"rcrae", "scan-l", "--config", cp.c_str()};
    CHECK(cli_main(4, argv) == 0);
    CHECK(fs::exists(d.path / "out" / "scan_l.csv"));
    CHECK(fs::exists(d.path / "out" / "manifest.json"));
  }
  {
    // scenario/subcommand mismatch is a config error
    const std::string cp = cfg_path.string();
    const char* argv[] = {"rcrae", "compare", "--config", cp.c_str()};
    CHECK(cli_main(4, argv) == 2);
  }
}

}  // TEST_SUITE
