#include "rcrae/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "rcrae/circuit.hpp"
#include "rcrae/rng.hpp"
#include "rcrae/sim.hpp"
#include "rcrae/twirl.hpp"

namespace rcrae {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

double get_number(const json& j, const std::string& path, const char* key, double dflt,
                  bool required = false) {
  if (!j.contains(key)) {
    if (required) fail(path + "." + key, "missing required field");
    return dflt;
  }
  if (!j[key].is_number()) fail(path + "." + key, "expected a number");
  return j[key].get<double>();
}

bool get_bool(const json& j, const std::string& path, const char* key, bool dflt) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_boolean()) fail(path + "." + key, "expected a boolean");
  return j[key].get<bool>();
}

std::string get_string(const json& j, const std::string& path, const char* key,
                       const std::string& dflt, bool required = false) {
  if (!j.contains(key)) {
    if (required) fail(path + "." + key, "missing required field");
    return dflt;
  }
  if (!j[key].is_string()) fail(path + "." + key, "expected a string");
  return j[key].get<std::string>();
}

NoiseConfig parse_noise(const json& j, int num_qubits) {
  NoiseConfig cfg;
  if (j.is_null()) {
    cfg.incoherent = false;
    cfg.coherent = false;
    return cfg;
  }
  if (!j.is_object()) fail("noise", "expected an object or null");
  cfg.t1 = get_number(j, "noise", "t1_us", 84.0) * 1e-6;
  cfg.t2 = get_number(j, "noise", "t2_us", 110.0) * 1e-6;
  cfg.t_step = get_number(j, "noise", "t_step_ns", 100.0) * 1e-9;
  cfg.t_gate = get_number(j, "noise", "t_gate_ns", 400.0) * 1e-9;

  std::vector<std::pair<int, int>> pairs;
  if (j.contains("zz_pairs")) {
    if (!j["zz_pairs"].is_array()) fail("noise.zz_pairs", "expected an array of [a, b] pairs");
    for (size_t i = 0; i < j["zz_pairs"].size(); ++i) {
      const auto& p = j["zz_pairs"][i];
      const std::string path = "noise.zz_pairs[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        fail(path, "expected [a, b] with integer qubit indices");
      const int a = p[0].get<int>(), b = p[1].get<int>();
      if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits)
        fail(path, "qubit index out of range for " + std::to_string(num_qubits) + " qubits");
      if (a == b) fail(path, "pair with equal qubits");
      pairs.emplace_back(a, b);
    }
  } else {
    for (int q = 0; q + 1 < num_qubits; ++q) pairs.emplace_back(q, q + 1);
  }

  std::vector<double> xi(pairs.size(), 0.0);
  bool any_zz = false;
  if (j.contains("zz_khz")) {
    const auto& z = j["zz_khz"];
    if (z.is_number()) {
      std::fill(xi.begin(), xi.end(), 2.0 * std::numbers::pi * z.get<double>() * 1e3);
      any_zz = z.get<double>() != 0.0;
    } else if (z.is_array()) {
      if (z.size() != pairs.size())
        fail("noise.zz_khz", "array length must match zz_pairs length");
      for (size_t i = 0; i < z.size(); ++i) {
        if (!z[i].is_number()) fail("noise.zz_khz[" + std::to_string(i) + "]", "expected a number");
        xi[i] = 2.0 * std::numbers::pi * z[i].get<double>() * 1e3;
        any_zz = any_zz || z[i].get<double>() != 0.0;
      }
    } else {
      fail("noise.zz_khz", "expected a number or array");
    }
  }
  cfg.zz_pairs = std::move(pairs);
  cfg.zz_strengths = std::move(xi);
  cfg.incoherent = get_bool(j, "noise", "incoherent", true);
  cfg.coherent = get_bool(j, "noise", "coherent", any_zz);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    fail("noise", e.what());
  }
  return cfg;
}

AnsatzSpec parse_ansatz(const json& j) {
  if (!j.is_object()) fail("ansatz", "expected an object");
  AnsatzSpec a;
  const std::string type = get_string(j, "ansatz", "type", "", true);
  if (type == "h2") {
    a.type = AnsatzSpec::Type::H2;
    a.theta0 = get_number(j, "ansatz", "theta0", 0.0, true);
    if (!std::isfinite(a.theta0)) fail("ansatz.theta0", "must be finite");
  } else if (type == "ldca") {
    a.type = AnsatzSpec::Type::Ldca;
    if (!j.contains("thetas") || !j["thetas"].is_array() || j["thetas"].size() != 8)
      fail("ansatz.thetas", "expected exactly 8 numbers");
    for (size_t i = 0; i < 8; ++i) {
      if (!j["thetas"][i].is_number())
        fail("ansatz.thetas[" + std::to_string(i) + "]", "expected a number");
      a.thetas[i] = j["thetas"][i].get<double>();
    }
  } else {
    fail("ansatz.type", "unknown ansatz '" + type + "' (expected h2 or ldca)");
  }
  return a;
}

Circuit build_ansatz(const AnsatzSpec& a) {
  return a.type == AnsatzSpec::Type::H2 ? build_h2_ansatz(a.theta0) : build_ldca(a.thetas);
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  ExperimentConfig cfg;

  const std::string scen = get_string(j, "config", "scenario", "", true);
  if (scen == "scan_l") cfg.scenario = Scenario::ScanL;
  else if (scen == "scan_pi") cfg.scenario = Scenario::ScanPi;
  else if (scen == "compare") cfg.scenario = Scenario::Compare;
  else fail("config.scenario", "unknown scenario '" + scen + "'");

  if (!j.contains("ansatz")) fail("config.ansatz", "missing required field");
  cfg.ansatz = parse_ansatz(j["ansatz"]);
  const int n = cfg.ansatz.num_qubits();

  cfg.observable = get_string(j, "config", "observable", "", true);
  try {
    Observable p = Observable::parse(cfg.observable);
    if (p.size() != n)
      fail("config.observable", "length must equal qubit count " + std::to_string(n));
    if (p.pauli().is_identity()) fail("config.observable", "must be non-identity");
  } catch (const std::invalid_argument& e) {
    fail("config.observable", e.what());
  }

  cfg.noise = parse_noise(j.contains("noise") ? j["noise"] : json(nullptr), n);

  const double m = get_number(j, "config", "m_shots", 0.0, true);
  if (m < 1 || m != std::floor(m)) fail("config.m_shots", "expected a positive integer");
  cfg.m_shots = static_cast<long long>(m);

  if (cfg.scenario == Scenario::ScanL) {
    const double lm = get_number(j, "config", "lmax", 8.0);
    if (lm < 2 || lm != std::floor(lm))
      fail("config.lmax", "expected an integer >= 2 (the fidelity fit needs 3 points)");
    cfg.lmax = static_cast<int>(lm);
  }
  if (cfg.scenario == Scenario::ScanPi) {
    const double lf = get_number(j, "config", "l_fixed", 1.0);
    if (lf < 0 || lf != std::floor(lf)) fail("config.l_fixed", "expected an integer >= 0");
    cfg.l_fixed = static_cast<int>(lf);
    const double sp = get_number(j, "config", "sweep_points", 200.0);
    if (sp < 3 || sp != std::floor(sp)) fail("config.sweep_points", "expected an integer >= 3");
    cfg.sweep_points = static_cast<int>(sp);
    if (cfg.ansatz.type != AnsatzSpec::Type::H2)
      fail("config.ansatz.type", "scan_pi sweeps theta0 and requires the h2 ansatz");
  }
  if (cfg.scenario == Scenario::Compare) {
    cfg.lmax_list = {1, 2, 3};
    if (j.contains("lmax_list")) {
      if (!j["lmax_list"].is_array() || j["lmax_list"].empty())
        fail("config.lmax_list", "expected a non-empty array of integers");
      cfg.lmax_list.clear();
      for (size_t i = 0; i < j["lmax_list"].size(); ++i) {
        if (!j["lmax_list"][i].is_number_integer() || j["lmax_list"][i].get<int>() < 0)
          fail("config.lmax_list[" + std::to_string(i) + "]", "expected an integer >= 0");
        cfg.lmax_list.push_back(j["lmax_list"][i].get<int>());
      }
    }
  }

  const double nd = get_number(j, "config", "n_duplicates", 50.0);
  if (nd < 1 || nd != std::floor(nd)) fail("config.n_duplicates", "expected a positive integer");
  cfg.duplicates = static_cast<int>(nd);

  const double br = get_number(j, "config", "b_runs", 64.0);
  if (br < 1 || br != std::floor(br)) fail("config.b_runs", "expected a positive integer");
  cfg.b_runs = static_cast<int>(br);

  const double rep = get_number(j, "config", "repeats", 50.0);
  if (rep < 1 || rep != std::floor(rep)) fail("config.repeats", "expected a positive integer");
  cfg.repeats = static_cast<int>(rep);

  if (j.contains("grid")) {
    const auto& g = j["grid"];
    if (!g.is_object()) fail("config.grid", "expected an object");
    const double gp = get_number(g, "config.grid", "pi_points", 2001.0);
    const double gf = get_number(g, "config.grid", "f_points", 501.0);
    if (gp < 3 || gp != std::floor(gp)) fail("config.grid.pi_points", "expected an integer >= 3");
    if (gf < 2 || gf != std::floor(gf)) fail("config.grid.f_points", "expected an integer >= 2");
    cfg.grid.pi_points = static_cast<int>(gp);
    cfg.grid.f_points = static_cast<int>(gf);
  }

  if (j.contains("n_o_override")) {
    const double v = get_number(j, "config", "n_o_override", 0.0);
    if (v < 0) fail("config.n_o_override", "must be >= 0");
    cfg.n_o_override = v;
  }

  const std::string arm = get_string(j, "config", "arm", "both");
  if (arm == "bare") cfg.arm = ArmSelect::Bare;
  else if (arm == "rc") cfg.arm = ArmSelect::Rc;
  else if (arm == "both") cfg.arm = ArmSelect::Both;
  else fail("config.arm", "expected bare, rc or both");

  const double seed = get_number(j, "config", "seed", 1.0);
  if (seed < 0 || seed != std::floor(seed)) fail("config.seed", "expected a non-negative integer");
  cfg.seed = static_cast<std::uint64_t>(seed);

  cfg.out_dir = get_string(j, "config", "out_dir", "out");
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config: parse error in '" + path + "': " + e.what());
  }
  return parse_config(j);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string ResultTable::to_csv() const {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

nlohmann::json ResultTable::to_json() const {
  nlohmann::ordered_json j;
  j["columns"] = columns;
  j["rows"] = rows;
  return j;
}

namespace {

struct ExperimentParts {
  Circuit ansatz;
  Observable observable;
  double pi_truth;  // noiseless <A|P|A>
  double n_ansatz;
  double n_reflection;
};

ExperimentParts prepare(const ExperimentConfig& cfg) {
  ExperimentParts parts{build_ansatz(cfg.ansatz), Observable::parse(cfg.observable), 0, 0, 0};
  parts.pi_truth = expectation(run(parts.ansatz, nullptr), parts.observable);
  parts.n_ansatz = two_qubit_gate_count(parts.ansatz);
  parts.n_reflection =
      cfg.n_o_override.value_or(two_qubit_gate_count(build_reflection_r0(parts.ansatz.num_qubits)));
  return parts;
}

const NoiseConfig* noise_ptr(const ExperimentConfig& cfg) {
  return (cfg.noise.incoherent || cfg.noise.coherent) ? &cfg.noise : nullptr;
}

/// Exact pooled p_even of a twirled ensemble (shot-weighted duplicate mean)
/// and the per-duplicate values.
struct EnsembleParities {
  std::vector<double> per_duplicate;
  double pooled_exact = 0.0;
};

EnsembleParities ensemble_parities(const TwirledEnsemble& ens, const NoiseConfig* noise,
                                   const Observable& p) {
  EnsembleParities out;
  out.per_duplicate.reserve(ens.duplicates.size());
  long long total = 0;
  for (size_t d = 0; d < ens.duplicates.size(); ++d) {
    const double pe = parity_distribution(run(ens.duplicates[d], noise), p);
    out.per_duplicate.push_back(pe);
    out.pooled_exact += static_cast<double>(ens.shots_per_duplicate[d]) * pe;
    total += ens.shots_per_duplicate[d];
  }
  out.pooled_exact /= static_cast<double>(total);
  return out;
}

long long sample_ensemble_even(const EnsembleParities& ep, const TwirledEnsemble& ens,
                               std::uint64_t seed) {
  long long even = 0;
  for (size_t d = 0; d < ens.duplicates.size(); ++d)
    even += sample_parities(std::clamp(ep.per_duplicate[d], 0.0, 1.0),
                            ens.shots_per_duplicate[d],
                            derive_seed(seed, {static_cast<std::uint64_t>(d)}))
                .even_count;
  return even;
}

}  // namespace

ResultTable run_scan_l(const ExperimentConfig& cfg) {
  const ExperimentParts parts = prepare(cfg);
  const NoiseConfig* noise = noise_ptr(cfg);
  const int num_l = cfg.lmax + 1;
  const long long shots_per_l = cfg.m_shots / num_l;
  if (shots_per_l < 1) throw ConfigError("config.m_shots: fewer shots than circuits");
  const bool want_bare = cfg.arm != ArmSelect::Rc;
  const bool want_rc = cfg.arm != ArmSelect::Bare;

  std::vector<double> bare_exact(num_l), bare_sampled(num_l);
  std::vector<double> rc_exact(num_l), rc_sampled(num_l);

#pragma omp parallel for schedule(dynamic)
  for (int l = 0; l < num_l; ++l) {
    const Circuit c = build_enhanced_circuit(parts.ansatz, parts.observable, l);
    if (want_bare) {
      const double pe = parity_distribution(run(c, noise), parts.observable);
      bare_exact[l] = pe;
      const auto rec = sample_parities(std::clamp(pe, 0.0, 1.0), shots_per_l,
                                       derive_seed(cfg.seed, {0, static_cast<std::uint64_t>(l)}));
      bare_sampled[l] = static_cast<double>(rec.even_count) / static_cast<double>(rec.shots);
    }
    if (want_rc) {
      const auto ens = make_ensemble(c, cfg.duplicates, shots_per_l,
                                     derive_seed(cfg.seed, {1, static_cast<std::uint64_t>(l)}));
      const auto ep = ensemble_parities(ens, noise, parts.observable);
      rc_exact[l] = ep.pooled_exact;
      rc_sampled[l] = static_cast<double>(sample_ensemble_even(
                          ep, ens, derive_seed(cfg.seed, {2, static_cast<std::uint64_t>(l)}))) /
                      static_cast<double>(shots_per_l);
    }
  }

  ResultTable t;
  t.columns = {"arm", "L", "p_even_exact", "p_even_sampled", "f_fit", "r2"};
  auto emit = [&](const char* arm, const std::vector<double>& exact,
                  const std::vector<double>& sampled) {
    std::vector<std::pair<int, double>> pts;
    for (int l = 0; l < num_l; ++l) pts.emplace_back(l, exact[l]);
    const FitResult fit = fit_layer_fidelity(pts, parts.pi_truth);
    for (int l = 0; l < num_l; ++l)
      t.rows.push_back({arm, std::to_string(l), format_double(exact[l]),
                        format_double(sampled[l]), format_double(fit.f),
                        format_double(fit.r2)});
  };
  if (want_bare) emit("bare", bare_exact, bare_sampled);
  if (want_rc) emit("rc", rc_exact, rc_sampled);
  return t;
}

ResultTable run_scan_pi(const ExperimentConfig& cfg) {
  const ExperimentParts parts = prepare(cfg);
  const NoiseConfig* noise = noise_ptr(cfg);
  const bool want_bare = cfg.arm != ArmSelect::Rc;
  const bool want_rc = cfg.arm != ArmSelect::Bare;
  const int npts = cfg.sweep_points;
  const long long shots_per_circuit = std::max<long long>(cfg.m_shots, cfg.duplicates);

  std::vector<double> theta(npts);
  {
    std::mt19937_64 eng = make_engine(derive_seed(cfg.seed, {7}));
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < npts; ++i) theta[i] = dist(eng);
  }

  std::vector<double> pi_exact(npts), bare_p(npts), rc_p(npts);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < npts; ++i) {
    const Circuit a = build_h2_ansatz(theta[i]);
    pi_exact[i] = expectation(run(a, nullptr), parts.observable);
    const Circuit c = build_enhanced_circuit(a, parts.observable, cfg.l_fixed);
    if (want_bare) bare_p[i] = parity_distribution(run(c, noise), parts.observable);
    if (want_rc) {
      const auto ens = make_ensemble(c, cfg.duplicates, shots_per_circuit,
                                     derive_seed(cfg.seed, {1, static_cast<std::uint64_t>(i)}));
      rc_p[i] = ensemble_parities(ens, noise, parts.observable).pooled_exact;
    }
  }

  ResultTable t;
  t.columns = {"arm", "theta0", "pi_exact", "p_even", "f_fit", "r2"};
  auto emit = [&](const char* arm, const std::vector<double>& p) {
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < npts; ++i) pts.emplace_back(pi_exact[i], p[i]);
    const FitResult fit = fit_sweep_fidelity(pts, cfg.l_fixed);
    for (int i = 0; i < npts; ++i)
      t.rows.push_back({arm, format_double(theta[i]), format_double(pi_exact[i]),
                        format_double(p[i]), format_double(fit.f), format_double(fit.r2)});
  };
  if (want_bare) emit("bare", bare_p);
  if (want_rc) emit("rc", rc_p);
  return t;
}

ResultTable run_compare(const ExperimentConfig& cfg) {
  const ExperimentParts parts = prepare(cfg);
  const NoiseConfig* noise = noise_ptr(cfg);
  const bool want_rae = cfg.arm != ArmSelect::Rc;
  const bool want_rc = cfg.arm != ArmSelect::Bare;

  int max_l = 0;
  for (int l : cfg.lmax_list) max_l = std::max(max_l, l);

  // Exact bare parities per L, shared by SS and RAE dataset sampling.
  std::vector<double> bare_p(max_l + 1);
  std::vector<Circuit> circuits(max_l + 1);
#pragma omp parallel for schedule(dynamic)
  for (int l = 0; l <= max_l; ++l) {
    circuits[l] = build_enhanced_circuit(parts.ansatz, parts.observable, l);
    bare_p[l] = parity_distribution(run(circuits[l], noise), parts.observable);
  }

  const int reps = cfg.repeats;
  std::vector<double> ss_est(reps);
  // est[lmax_index][method 0=rae 1=rc][repeat]
  std::vector<std::array<std::vector<double>, 2>> est(cfg.lmax_list.size());
  for (auto& pair : est)
    for (auto& v : pair) v.assign(reps, 0.0);

  EstimateOptions opt;
  opt.grid = cfg.grid;
  opt.refinements = cfg.b_runs;

#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < reps; ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    {  // standard sampling: all M shots at L = 0
      const auto rec = sample_parities(std::clamp(bare_p[0], 0.0, 1.0), cfg.m_shots,
                                       derive_seed(cfg.seed, {0, ur}));
      ss_est[r] = 2.0 * static_cast<double>(rec.even_count) / static_cast<double>(rec.shots) - 1.0;
    }
    for (size_t li = 0; li < cfg.lmax_list.size(); ++li) {
      const int lmax = cfg.lmax_list[li];
      const auto ul = static_cast<std::uint64_t>(lmax);
      const long long shots_per_l = cfg.m_shots / (lmax + 1);
      if (want_rae) {
        ParityDataset ds;
        for (int l = 0; l <= lmax; ++l)
          ds.records.push_back(
              {l, shots_per_l,
               sample_parities(std::clamp(bare_p[l], 0.0, 1.0), shots_per_l,
                               derive_seed(cfg.seed, {1, ul, ur, static_cast<std::uint64_t>(l)}))
                   .even_count});
        est[li][0][r] = estimate(ds, opt, derive_seed(cfg.seed, {3, ul, ur})).pi_hat;
      }
      if (want_rc) {
        ParityDataset ds;
        for (int l = 0; l <= lmax; ++l) {
          const auto ull = static_cast<std::uint64_t>(l);
          const auto ens = make_ensemble(circuits[l], cfg.duplicates, shots_per_l,
                                         derive_seed(cfg.seed, {2, ul, ur, ull}));
          const auto ep = ensemble_parities(ens, noise, parts.observable);
          ds.records.push_back(
              {l, shots_per_l,
               sample_ensemble_even(ep, ens, derive_seed(cfg.seed, {4, ul, ur, ull}))});
        }
        est[li][1][r] = estimate(ds, opt, derive_seed(cfg.seed, {5, ul, ur})).pi_hat;
      }
    }
  }

  ResultTable t;
  t.columns = {"method", "lmax", "mean", "bias", "rmse", "se_mean", "se_rmse",
               "runtime_units_a"};
  auto emit = [&](const char* method, int lmax, std::span<const double> es) {
    const double rt = runtime_units(static_cast<double>(cfg.m_shots), lmax,
                                    parts.n_reflection, parts.n_ansatz);
    const EstimateSummary s = summarize(es, parts.pi_truth, rt);
    t.rows.push_back({method, std::to_string(lmax), format_double(s.mean),
                      format_double(s.bias), format_double(s.rmse), format_double(s.se_mean),
                      format_double(s.se_rmse), format_double(s.runtime)});
  };
  emit("ss", 0, ss_est);
  if (want_rae)
    for (size_t li = 0; li < cfg.lmax_list.size(); ++li)
      emit("rae", cfg.lmax_list[li], est[li][0]);
  if (want_rc)
    for (size_t li = 0; li < cfg.lmax_list.size(); ++li)
      emit("rc-rae", cfg.lmax_list[li], est[li][1]);
  return t;
}

ResultTable run_scenario(const ExperimentConfig& cfg, const json& raw_config,
                         OutputFormat format) {
  const auto t0 = std::chrono::steady_clock::now();
  ResultTable table;
  const char* name = "";
  switch (cfg.scenario) {
    case Scenario::ScanL: table = run_scan_l(cfg); name = "scan_l"; break;
    case Scenario::ScanPi: table = run_scan_pi(cfg); name = "scan_pi"; break;
    case Scenario::Compare: table = run_compare(cfg); name = "compare"; break;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  if (format != OutputFormat::Json) {
    std::ofstream csv(fs::path(cfg.out_dir) / (std::string(name) + ".csv"));
    csv << table.to_csv();
  }
  if (format != OutputFormat::Csv) {
    std::ofstream js(fs::path(cfg.out_dir) / (std::string(name) + ".json"));
    js << table.to_json().dump(2) << '\n';
  }

  nlohmann::ordered_json manifest;
  manifest["config"] = raw_config;
  manifest["seed"] = cfg.seed;
  manifest["arm"] = cfg.arm == ArmSelect::Bare ? "bare" : cfg.arm == ArmSelect::Rc ? "rc" : "both";
  manifest["version"] = std::string("rcrae ") + RCRAE_VERSION;
  manifest["wall_time_s"] = wall;
  std::ofstream mf(fs::path(cfg.out_dir) / "manifest.json");
  mf << manifest.dump(2) << '\n';
  return table;
}

}  // namespace rcrae
