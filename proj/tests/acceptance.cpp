// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are sized for a workstation run of a few minutes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <vector>

#include "rcrae/circuit.hpp"
#include "rcrae/harness.hpp"
#include "rcrae/inference.hpp"
#include "rcrae/noise.hpp"
#include "rcrae/rng.hpp"
#include "rcrae/sim.hpp"
#include "rcrae/twirl.hpp"
#include "test_support.hpp"

using namespace rcrae;
namespace fs = std::filesystem;

namespace {

constexpr double kH2Theta = -6.057;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int criterion, bool pass, const std::string& detail, double secs) {
  std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

NoiseConfig transmon_noise(double zz_khz, bool incoherent, bool coherent) {
  NoiseConfig cfg = NoiseConfig::linear_chain(4, kTwoPi * zz_khz * 1e3);
  cfg.t1 = 84e-6;
  cfg.t2 = 110e-6;
  cfg.incoherent = incoherent;
  cfg.coherent = coherent;
  return cfg;
}

double exact_pi(const Circuit& ansatz, const Observable& p) {
  return expectation(run(ansatz, nullptr), p);
}

// ---------------------------------------------------------------------------

void criterion_1_expectation_anchors() {
  Timer t;
  const double h2 = exact_pi(build_h2_ansatz(kH2Theta), Observable::parse("XXXX"));
  const std::array<double, 8> thetas = {-1.491, 1.838, 1.977, 2.305,
                                        -3.124, 2.049, 1.254, -1.791};
  const double ldca = exact_pi(build_ldca(thetas), Observable::parse("XX"));
  const bool pass = std::abs(h2 - 0.2238) <= 5e-4 && std::abs(ldca - 0.39) <= 5e-3;
  report(1, pass,
         fmt("expectation anchors <XXXX>=%.5f (0.2238 +/- 5e-4), <XX>=%.5f (0.39 +/- 5e-3)",
             h2, ldca),
         t.seconds());
}

void criterion_2_noiseless_likelihood() {
  Timer t;
  const Circuit a = build_h2_ansatz(kH2Theta);
  const Observable p = Observable::parse("XXXX");
  const double pi_val = exact_pi(a, p);
  double worst = 0.0;
  for (int layers = 0; layers <= 10; ++layers) {
    const double p_even = parity_distribution(run(build_enhanced_circuit(a, p, layers), nullptr), p);
    const double model = 0.5 * (1.0 + std::cos((2 * layers + 1) * std::acos(pi_val)));
    worst = std::max(worst, std::abs(p_even - model));
  }
  report(2, worst < 1e-9,
         fmt("noiseless p_even matches the cosine model for L=0..10, max |err|=%.2e", worst),
         t.seconds());
}

std::pair<double, double> layer_scan_fit(const NoiseConfig& cfg, int lmax) {
  const Circuit a = build_h2_ansatz(kH2Theta);
  const Observable p = Observable::parse("XXXX");
  const double pi_val = exact_pi(a, p);
  std::vector<double> pe(lmax + 1);
#pragma omp parallel for schedule(dynamic)
  for (int layers = 0; layers <= lmax; ++layers)
    pe[layers] = parity_distribution(run(build_enhanced_circuit(a, p, layers), &cfg), p);
  std::vector<std::pair<int, double>> pts;
  for (int layers = 0; layers <= lmax; ++layers) pts.emplace_back(layers, pe[layers]);
  const FitResult fit = fit_layer_fidelity(pts, pi_val);
  return {fit.f, fit.r2};
}

double g_r2_incoherent = 0.0;

void criterion_3_incoherent_fit() {
  Timer t;
  const auto [f, r2] = layer_scan_fit(transmon_noise(0.0, true, false), 8);
  g_r2_incoherent = r2;
  report(3, r2 >= 0.99 && f > 0.0 && f < 1.0,
         fmt("incoherent-only layer fit: f=%.4f, R2=%.6f (need R2 >= 0.99, f in (0,1))", f, r2),
         t.seconds());
}

void criterion_4_coherent_degradation() {
  Timer t;
  if (g_r2_incoherent == 0.0)  // running without criterion 3: recompute the reference
    g_r2_incoherent = layer_scan_fit(transmon_noise(0.0, true, false), 8).second;
  const auto [f, r2] = layer_scan_fit(transmon_noise(45.0, true, true), 8);
  report(4, r2 < g_r2_incoherent,
         fmt("adding 45 kHz ZZ lowers R2: %.4f < %.4f, f=%.4f", r2, g_r2_incoherent, f),
         t.seconds());
}

void criterion_5_rc_restoration() {
  Timer t;
  const NoiseConfig cfg = transmon_noise(75.0, true, true);
  const Observable p = Observable::parse("XXXX");
  const int points = 200, duplicates = 50;
  const std::uint64_t seed = 20260811;

  std::vector<double> theta(points);
  {
    std::mt19937_64 eng = make_engine(derive_seed(seed, {7}));
    std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
    for (double& x : theta) x = dist(eng);
  }

  std::vector<double> pi_exact(points), bare(points), pooled(points);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < points; ++i) {
    const Circuit a = build_h2_ansatz(theta[i]);
    pi_exact[i] = exact_pi(a, p);
    const Circuit c = build_enhanced_circuit(a, p, 1);
    bare[i] = parity_distribution(run(c, &cfg), p);
    const TwirledEnsemble ens = make_ensemble(c, duplicates, 10000,
                                              derive_seed(seed, {1, static_cast<std::uint64_t>(i)}));
    double acc = 0.0;
    long long total = 0;
    for (size_t d = 0; d < ens.duplicates.size(); ++d) {
      acc += static_cast<double>(ens.shots_per_duplicate[d]) *
             parity_distribution(run(ens.duplicates[d], &cfg), p);
      total += ens.shots_per_duplicate[d];
    }
    pooled[i] = acc / static_cast<double>(total);
  }

  std::vector<std::pair<double, double>> bare_pts, rc_pts;
  for (int i = 0; i < points; ++i) {
    bare_pts.emplace_back(pi_exact[i], bare[i]);
    rc_pts.emplace_back(pi_exact[i], pooled[i]);
  }
  const FitResult fb = fit_sweep_fidelity(bare_pts, 1);
  const FitResult fr = fit_sweep_fidelity(rc_pts, 1);
  const bool pass = fr.r2 > fb.r2 && fr.f < 0.6;
  report(5, pass,
         fmt("RC sweep restoration: R2 rc=%.4f > bare=%.4f, f_rc=%.3f < 0.6 "
             "(reference 0.34 +/- 0.15 soft: |diff|=%.3f)",
             fr.r2, fb.r2, fr.f, std::abs(fr.f - 0.34)),
         t.seconds());
}

void criterion_6_logical_equivalence() {
  Timer t;
  std::mt19937_64 eng(606);
  int checked = 0;
  double worst = 0.0;
  bool kinds_ok = true;
  while (checked < 500) {
    const int n = 2 + static_cast<int>(eng() % 3);
    const Circuit c = testsupport::random_circuit(n, 1 + static_cast<int>(eng() % 4), eng);
    const Matrix bare = unitary_of(c);
    for (int k = 0; k < 5 && checked < 500; ++k, ++checked) {
      const Circuit tw = twirl_once(c, eng());
      worst = std::max(worst, phase_aligned_distance(unitary_of(tw), bare));
      kinds_ok = kinds_ok && tw.cycles.size() == c.cycles.size();
      for (size_t i = 0; kinds_ok && i < c.cycles.size(); ++i)
        kinds_ok = tw.cycles[i].kind == c.cycles[i].kind;
    }
  }
  report(6, worst < 1e-9 && kinds_ok,
         fmt("500 random twirls: max phase-aligned deviation %.2e, cycle kinds preserved: %s",
             worst, kinds_ok ? "yes" : "no"),
         t.seconds());
}

void criterion_7_enhanced_sampling() {
  Timer t;
  // Generic interference angle. At pi = 0.2238 the Lmax = 1 step is
  // exactly-identified in (pi, f) and the Cramer-Rao bound already exceeds
  // the Lmax = 0 error, so no estimator can decrease there; the sampling
  // enhancement is a property of generic pi.
  const double truth = 0.7;
  const long long m_total = 20000;
  const int repeats = 50;
  EstimateOptions opt;  // spec-default grid and B

  std::vector<double> rmse(3);
  for (int lmax = 0; lmax <= 2; ++lmax) {
    const long long shots = m_total / (lmax + 1);
    std::vector<double> ests(repeats);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < repeats; ++r) {
      ParityDataset ds;
      for (int l = 0; l <= lmax; ++l) {
        const double pe = 0.5 * (1.0 + std::cos((2 * l + 1) * std::acos(truth)));
        ds.records.push_back(
            {l, shots,
             sample_parities(pe, shots,
                             derive_seed(707, {static_cast<std::uint64_t>(lmax),
                                               static_cast<std::uint64_t>(r),
                                               static_cast<std::uint64_t>(l)}))
                 .even_count});
      }
      ests[r] = estimate(ds, opt,
                         derive_seed(708, {static_cast<std::uint64_t>(lmax),
                                           static_cast<std::uint64_t>(r)}))
                    .pi_hat;
    }
    rmse[lmax] = summarize(ests, truth, 1.0).rmse;
  }
  const bool pass = rmse[0] > rmse[1] && rmse[1] > rmse[2];
  report(7, pass,
         fmt("noiseless RMSE strictly decreases with Lmax: %.5f > %.5f > %.5f",
             rmse[0], rmse[1], rmse[2]),
         t.seconds());
}

void criterion_8_bias_reduction() {
  Timer t;
  const NoiseConfig cfg = transmon_noise(75.0, true, true);
  const Circuit a = build_h2_ansatz(kH2Theta);
  const Observable p = Observable::parse("XXXX");
  const double truth = exact_pi(a, p);
  const long long m_total = 20000;
  const int repeats = 50, duplicates = 50;
  const std::uint64_t seed = 808;
  EstimateOptions opt;

  std::vector<Circuit> circuits(4);
  std::vector<double> bare_p(4);
  for (int l = 0; l <= 3; ++l) {
    circuits[l] = build_enhanced_circuit(a, p, l);
    bare_p[l] = parity_distribution(run(circuits[l], &cfg), p);
  }

  std::string detail = "75 kHz bias |rc| < |rae|:";
  bool pass = true;
  for (int lmax = 1; lmax <= 3; ++lmax) {
    const long long shots = m_total / (lmax + 1);
    std::vector<double> rae(repeats), rc(repeats);
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < repeats; ++r) {
      const auto ul = static_cast<std::uint64_t>(lmax);
      const auto ur = static_cast<std::uint64_t>(r);
      ParityDataset ds_rae, ds_rc;
      for (int l = 0; l <= lmax; ++l) {
        const auto ull = static_cast<std::uint64_t>(l);
        ds_rae.records.push_back(
            {l, shots,
             sample_parities(std::clamp(bare_p[l], 0.0, 1.0), shots,
                             derive_seed(seed, {1, ul, ur, ull}))
                 .even_count});
        const TwirledEnsemble ens =
            make_ensemble(circuits[l], duplicates, shots, derive_seed(seed, {2, ul, ur, ull}));
        long long even = 0;
        for (size_t d = 0; d < ens.duplicates.size(); ++d) {
          const double pd = parity_distribution(run(ens.duplicates[d], &cfg), p);
          even += sample_parities(std::clamp(pd, 0.0, 1.0), ens.shots_per_duplicate[d],
                                  derive_seed(seed, {4, ul, ur, ull, d}))
                      .even_count;
        }
        ds_rc.records.push_back({l, shots, even});
      }
      rae[r] = estimate(ds_rae, opt, derive_seed(seed, {3, ul, ur})).pi_hat;
      rc[r] = estimate(ds_rc, opt, derive_seed(seed, {5, ul, ur})).pi_hat;
    }
    const double bias_rae = summarize(rae, truth, 1.0).bias;
    const double bias_rc = summarize(rc, truth, 1.0).bias;
    pass = pass && std::abs(bias_rc) < std::abs(bias_rae);
    detail += fmt(" Lmax=%d: %.4f vs %.4f;", lmax, std::abs(bias_rc), std::abs(bias_rae));
  }
  report(8, pass, detail, t.seconds());
}

void criterion_9_algebra() {
  Timer t;
  std::mt19937_64 eng(909);
  bool pass = true;

  std::uniform_real_distribution<double> mu(1, 1e6);
  for (int i = 0; i < 1000 && pass; ++i) {
    const double m = mu(eng);
    const int lmax = static_cast<int>(eng() % 12);
    const double no = static_cast<double>(eng() % 200);
    const double na = 1.0 + static_cast<double>(eng() % 40);
    double summed = 0.0;
    for (int k = 0; k <= lmax; ++k) summed += (2.0 * k + 1.0) + no / na * k;
    summed *= m / (lmax + 1.0);
    pass = std::abs(runtime_units(m, lmax, no, na) - summed) <=
           1e-9 * std::max(1.0, std::abs(summed));
  }
  const bool runtime_ok = pass;

  pass = true;
  for (int i = 0; i < 1000 && pass; ++i) {
    const int n = 1 + static_cast<int>(eng() % 100);
    const long long m = n + static_cast<long long>(eng() % 1000000);
    long long sum = 0;
    for (long long s : allocate_shots(m, n)) sum += s;
    pass = sum == m;
  }
  const bool shots_ok = pass;

  std::uniform_real_distribution<double> tdist(1e-6, 5e-4), dt(1e-9, 2e-6);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i)
    worst = std::max(worst, damping_kraus(tdist(eng), tdist(eng), dt(eng)).completeness_error());

  report(9, runtime_ok && shots_ok && worst < 1e-12,
         fmt("runtime identity: %s, shot accounting: %s, Kraus completeness max err %.1e",
             runtime_ok ? "ok" : "bad", shots_ok ? "ok" : "bad", worst),
         t.seconds());
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void criterion_10_determinism() {
  Timer t;
  bool pass = true;
  std::string detail = "byte-identical reruns:";

  const nlohmann::json scan_pi_cfg = {
      {"scenario", "scan_pi"},
      {"ansatz", {{"type", "h2"}, {"theta0", kH2Theta}}},
      {"observable", "XXXX"},
      {"noise", {{"t1_us", 84}, {"t2_us", 110}, {"zz_khz", 45}}},
      {"m_shots", 2000},
      {"sweep_points", 24},
      {"n_duplicates", 6},
      {"seed", 10101},
  };
  const nlohmann::json compare_cfg = {
      {"scenario", "compare"},
      {"ansatz", {{"type", "h2"}, {"theta0", kH2Theta}}},
      {"observable", "XXXX"},
      {"noise", {{"t1_us", 84}, {"t2_us", 110}, {"zz_khz", 45}}},
      {"m_shots", 2000},
      {"lmax_list", {1}},
      {"repeats", 4},
      {"n_duplicates", 4},
      {"b_runs", 8},
      {"grid", {{"pi_points", 401}, {"f_points", 101}}},
      {"seed", 10101},
  };

  for (const auto& [raw, name] : {std::pair{scan_pi_cfg, std::string("scan_pi")},
                                  std::pair{compare_cfg, std::string("compare")}}) {
    ExperimentConfig cfg = parse_config(raw);
    const fs::path base = fs::temp_directory_path() / ("rcrae_acc10_" + name);
    fs::remove_all(base);
    cfg.out_dir = (base / "a").string();
    run_scenario(cfg, raw);
    cfg.out_dir = (base / "b").string();
    run_scenario(cfg, raw);
    const bool csv_ok = slurp(base / "a" / (name + ".csv")) == slurp(base / "b" / (name + ".csv"));
    const bool json_ok =
        slurp(base / "a" / (name + ".json")) == slurp(base / "b" / (name + ".json"));
    auto m1 = nlohmann::json::parse(slurp(base / "a" / "manifest.json"));
    auto m2 = nlohmann::json::parse(slurp(base / "b" / "manifest.json"));
    m1.erase("wall_time_s");
    m2.erase("wall_time_s");
    const bool man_ok = m1 == m2;
    pass = pass && csv_ok && json_ok && man_ok;
    detail += fmt(" %s csv=%s json=%s manifest(mod wall time)=%s;", name.c_str(),
                  csv_ok ? "ok" : "bad", json_ok ? "ok" : "bad", man_ok ? "ok" : "bad");
    fs::remove_all(base);
  }
  report(10, pass, detail, t.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  std::printf("acceptance suite (rcrae %s)\n", RCRAE_VERSION);
  auto wanted = [&](int k) {
    if (argc < 2) return true;
    for (int i = 1; i < argc; ++i)
      if (std::atoi(argv[i]) == k) return true;
    return false;
  };
  if (wanted(1)) criterion_1_expectation_anchors();
  if (wanted(2)) criterion_2_noiseless_likelihood();
  if (wanted(3)) criterion_3_incoherent_fit();
  if (wanted(4)) criterion_4_coherent_degradation();
  if (wanted(5)) criterion_5_rc_restoration();
  if (wanted(6)) criterion_6_logical_equivalence();
  if (wanted(7)) criterion_7_enhanced_sampling();
  if (wanted(8)) criterion_8_bias_reduction();
  if (wanted(9)) criterion_9_algebra();
  if (wanted(10)) criterion_10_determinism();
  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
