#include "rcrae/inference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "rcrae/rng.hpp"

namespace rcrae {

namespace {

constexpr double kProbFloor = 1e-12;

double clamp_prob(double p) {
  return std::clamp(p, kProbFloor, 1.0 - kProbFloor);
}

double golden_max(const std::function<double(double)>& fn, double lo, double hi,
                  double tol = 1e-12) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  while (b - a > tol) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void ParityDataset::validate() const {
  std::set<int> seen;
  for (const ParityRecord& r : records) {
    if (r.layers < 0) throw std::invalid_argument("dataset: negative layer count");
    if (!seen.insert(r.layers).second)
      throw std::invalid_argument("dataset: duplicate layer count");
    if (r.shots < 1) throw std::invalid_argument("dataset: record without shots");
    if (r.even_count < 0 || r.even_count > r.shots)
      throw std::invalid_argument("dataset: even count outside [0, shots]");
  }
}

bool ParityDataset::single_layer() const {
  std::set<int> ls;
  for (const ParityRecord& r : records) ls.insert(r.layers);
  return ls.size() == 1;
}

double likelihood(int parity, double pi, double f, int layers) {
  if (parity != 0 && parity != 1) throw std::invalid_argument("likelihood: parity must be 0 or 1");
  if (!(pi >= -1.0 && pi <= 1.0)) throw std::invalid_argument("likelihood: |pi| must be <= 1");
  if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("likelihood: f must be in [0, 1]");
  if (layers < 0) throw std::invalid_argument("likelihood: negative layer count");
  const double c = std::cos((2.0 * layers + 1.0) * std::acos(pi));
  const double amp = std::pow(f, layers + 0.5) * c;
  return parity == 0 ? 0.5 * (1.0 + amp) : 0.5 * (1.0 - amp);
}

double log_likelihood(const ParityDataset& ds, double pi, double f) {
  if (ds.records.empty()) throw std::invalid_argument("log_likelihood: empty dataset");
  double ll = 0.0;
  for (const ParityRecord& r : ds.records) {
    const double p_even = clamp_prob(likelihood(0, pi, f, r.layers));
    ll += r.even_count * std::log(p_even) +
          (r.shots - r.even_count) * std::log1p(-p_even);
  }
  return ll;
}

LikelihoodParams estimate(const ParityDataset& ds, const EstimateOptions& opt,
                          std::uint64_t seed) {
  ds.validate();
  if (ds.records.empty()) throw std::invalid_argument("estimate: empty dataset");

  std::optional<double> fixed_f = opt.fixed_f;
  if (!fixed_f && ds.single_layer()) fixed_f = 1.0;  // f unidentifiable from one L

  const int npi = std::max(opt.grid.pi_points, 3);
  const int nf = fixed_f ? 1 : std::max(opt.grid.f_points, 2);
  const double dpi = 2.0 / (npi - 1);
  const double df = fixed_f ? 0.0 : 1.0 / (nf - 1);
  const auto& recs = ds.records;
  const int nrec = static_cast<int>(recs.size());
  if (nrec > 64) throw std::invalid_argument("estimate: more than 64 layer records");

  // Dense log-likelihood surface. Rows are filled independently so the
  // parallel fill is reproducible.
  std::vector<double> surface(static_cast<size_t>(npi) * nf);
  std::vector<double> fpow(static_cast<size_t>(nf) * nrec);
  for (int j = 0; j < nf; ++j) {
    const double f = fixed_f ? *fixed_f : j * df;
    for (int k = 0; k < nrec; ++k)
      fpow[static_cast<size_t>(j) * nrec + k] = std::pow(f, recs[k].layers + 0.5);
  }

#pragma omp parallel for schedule(static)
  for (int i = 0; i < npi; ++i) {
    const double pi = -1.0 + i * dpi;
    const double theta = std::acos(std::clamp(pi, -1.0, 1.0));
    double cs[64];
    for (int k = 0; k < nrec; ++k) cs[k] = std::cos((2.0 * recs[k].layers + 1.0) * theta);
    for (int j = 0; j < nf; ++j) {
      double ll = 0.0;
      for (int k = 0; k < nrec; ++k) {
        const double p = clamp_prob(0.5 * (1.0 + fpow[static_cast<size_t>(j) * nrec + k] * cs[k]));
        ll += recs[k].even_count * std::log(p) +
              (recs[k].shots - recs[k].even_count) * std::log1p(-p);
      }
      surface[static_cast<size_t>(i) * nf + j] = ll;
    }
  }

  // Grid argmax with ties broken toward smaller |pi|, then first occurrence.
  size_t best_cell = 0;
  for (size_t cell = 1; cell < surface.size(); ++cell) {
    const double ll = surface[cell];
    const double best_ll = surface[best_cell];
    if (ll > best_ll) {
      best_cell = cell;
    } else if (ll == best_ll) {
      const double pi_new = -1.0 + static_cast<double>(cell / nf) * dpi;
      const double pi_old = -1.0 + static_cast<double>(best_cell / nf) * dpi;
      if (std::abs(pi_new) < std::abs(pi_old)) best_cell = cell;
    }
  }
  const double best_ll = surface[best_cell];

  // Flat-likelihood detection: a sharp maximum touches a handful of cells;
  // a ridge or plateau touches entire grid lines.
  size_t near_max = 0;
  for (double ll : surface)
    if (ll >= best_ll - 1e-6) ++near_max;
  const bool flat = near_max >= std::max<size_t>(16, surface.size() / 2000);

  const int b_runs = std::max(opt.refinements, 1);
  std::vector<size_t> order(surface.size());
  std::iota(order.begin(), order.end(), 0);
  const size_t top = std::min<size_t>(b_runs, order.size());
  std::partial_sort(order.begin(), order.begin() + top, order.end(),
                    [&](size_t a, size_t b) {
                      if (surface[a] != surface[b]) return surface[a] > surface[b];
                      const double pa = std::abs(-1.0 + static_cast<double>(a / nf) * dpi);
                      const double pb = std::abs(-1.0 + static_cast<double>(b / nf) * dpi);
                      if (pa != pb) return pa < pb;
                      return a < b;
                    });

  std::mt19937_64 eng = make_engine(derive_seed(seed, {0x9e1f}));
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);

  auto ll_at = [&](double pi, double f) {
    double ll = 0.0;
    for (const ParityRecord& r : recs) {
      const double c = std::cos((2.0 * r.layers + 1.0) * std::acos(std::clamp(pi, -1.0, 1.0)));
      const double p = clamp_prob(0.5 * (1.0 + std::pow(f, r.layers + 0.5) * c));
      ll += r.even_count * std::log(p) + (r.shots - r.even_count) * std::log1p(-p);
    }
    return ll;
  };

  double pi_sum = 0.0, f_sum = 0.0;
  for (int b = 0; b < b_runs; ++b) {
    const size_t cell = order[b % top];
    double pi = -1.0 + static_cast<double>(cell / nf) * dpi + jitter(eng) * dpi;
    double f = fixed_f ? *fixed_f
                       : static_cast<double>(cell % nf) * df + jitter(eng) * df;
    pi = std::clamp(pi, -1.0, 1.0);
    f = std::clamp(f, 0.0, 1.0);
    for (int sweep = 0; sweep < 3; ++sweep) {
      pi = golden_max([&](double x) { return ll_at(x, f); },
                      std::max(-1.0, pi - dpi), std::min(1.0, pi + dpi));
      if (!fixed_f)
        f = golden_max([&](double x) { return ll_at(pi, x); },
                       std::max(0.0, f - df), std::min(1.0, f + df));
    }
    pi_sum += pi;
    f_sum += f;
  }

  LikelihoodParams out;
  out.pi_hat = pi_sum / b_runs;
  out.f = fixed_f ? *fixed_f : f_sum / b_runs;
  out.lambda = out.f > 0.0 ? -std::log(out.f) : std::numeric_limits<double>::infinity();
  out.flat_likelihood = flat;
  return out;
}

namespace {

FitResult fit_f_least_squares(const std::vector<double>& coeffs,
                              const std::vector<double>& exponents,
                              const std::vector<double>& values) {
  const size_t n = values.size();
  auto ss_res = [&](double f) {
    double ss = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double model = 0.5 * (1.0 + std::pow(f, exponents[i]) * coeffs[i]);
      const double d = values[i] - model;
      ss += d * d;
    }
    return ss;
  };

  const int scan = 4001;
  double best_f = 0.0, best_ss = ss_res(0.0);
  for (int i = 1; i < scan; ++i) {
    const double f = static_cast<double>(i) / (scan - 1);
    const double ss = ss_res(f);
    if (ss < best_ss) {
      best_ss = ss;
      best_f = f;
    }
  }
  const double df = 1.0 / (scan - 1);
  const double f_ref = golden_max([&](double f) { return -ss_res(f); },
                                  std::max(0.0, best_f - df), std::min(1.0, best_f + df));
  const double ss = ss_res(f_ref);

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss_tot = 0.0;
  for (double v : values) ss_tot += (v - mean) * (v - mean);

  FitResult out;
  out.f = f_ref;
  if (ss_tot > 0.0)
    out.r2 = 1.0 - ss / ss_tot;
  else
    out.r2 = ss <= 1e-30 ? 1.0 : -std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace

FitResult fit_layer_fidelity(std::span<const std::pair<int, double>> points, double pi_known) {
  if (points.size() < 3) throw std::invalid_argument("fit: need at least 3 points");
  if (!(pi_known >= -1.0 && pi_known <= 1.0))
    throw std::invalid_argument("fit: |pi| must be <= 1");
  const double theta = std::acos(pi_known);
  std::vector<double> coeffs, exponents, values;
  for (const auto& [layers, p] : points) {
    coeffs.push_back(std::cos((2.0 * layers + 1.0) * theta));
    exponents.push_back(layers + 0.5);
    values.push_back(p);
  }
  return fit_f_least_squares(coeffs, exponents, values);
}

FitResult fit_sweep_fidelity(std::span<const std::pair<double, double>> points, int layers) {
  if (points.size() < 3) throw std::invalid_argument("fit: need at least 3 points");
  if (layers < 0) throw std::invalid_argument("fit: negative layer count");
  std::vector<double> coeffs, exponents, values;
  for (const auto& [pi, p] : points) {
    coeffs.push_back(std::cos((2.0 * layers + 1.0) * std::acos(std::clamp(pi, -1.0, 1.0))));
    exponents.push_back(layers + 0.5);
    values.push_back(p);
  }
  return fit_f_least_squares(coeffs, exponents, values);
}

double runtime_units(double total_shots, int lmax, double n_reflection, double n_ansatz) {
  if (n_ansatz < 1.0) throw std::invalid_argument("runtime: n_A must be >= 1");
  if (lmax < 0) throw std::invalid_argument("runtime: negative Lmax");
  return total_shots * (lmax + 1.0) +
         total_shots * n_reflection / (2.0 * n_ansatz) * lmax;
}

EstimateSummary summarize(std::span<const double> estimates, double truth, double runtime) {
  const size_t n = estimates.size();
  if (n < 2) throw std::invalid_argument("summarize: need at least 2 estimates");

  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= static_cast<double>(n);

  double var = 0.0, mse = 0.0;
  for (double e : estimates) {
    var += (e - mean) * (e - mean);
    const double d = e - truth;
    mse += d * d;
  }
  var /= static_cast<double>(n - 1);
  mse /= static_cast<double>(n);

  double mse_var = 0.0;
  for (double e : estimates) {
    const double d = (e - truth) * (e - truth) - mse;
    mse_var += d * d;
  }
  mse_var /= static_cast<double>(n - 1);

  EstimateSummary s;
  s.mean = mean;
  s.bias = mean - truth;
  s.rmse = std::sqrt(mse);
  s.se_mean = std::sqrt(var / static_cast<double>(n));
  const double se_mse = std::sqrt(mse_var / static_cast<double>(n));
  s.se_rmse = s.rmse > 1e-300 ? se_mse / (2.0 * s.rmse) : 0.0;
  s.runtime = runtime;
  return s;
}

}  // namespace rcrae
