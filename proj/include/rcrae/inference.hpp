#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rcrae {

struct ParityRecord {
  int layers = 0;
  long long shots = 0;
  long long even_count = 0;
};

/// Per-L shot totals and even-parity counts; the estimator's sole input.
struct ParityDataset {
  std::vector<ParityRecord> records;

  /// Throws std::invalid_argument on duplicate L or bad counts.
  void validate() const;
  bool single_layer() const;
};

struct LikelihoodParams {
  double pi_hat = 0.0;
  double f = 1.0;
  double lambda = 0.0;  // f = exp(-lambda)
  bool flat_likelihood = false;
};

struct GridSpec {
  int pi_points = 2001;
  int f_points = 501;
};

struct EstimateOptions {
  GridSpec grid;
  int refinements = 64;  // B
  /// Fix the nuisance parameter instead of estimating it jointly. Set
  /// automatically to 1 for single-L datasets, where f is unidentifiable.
  std::optional<double> fixed_f;
};

struct EstimateSummary {
  double mean = 0.0;
  double bias = 0.0;
  double rmse = 0.0;
  double se_mean = 0.0;
  double se_rmse = 0.0;
  double runtime = 0.0;  // units of A
};

struct FitResult {
  double f = 1.0;
  double r2 = 1.0;
};

/// L(d | pi) = (1 + (-1)^d f^(L+1/2) cos((2L+1) acos(pi))) / 2.
double likelihood(int parity, double pi, double f, int layers);

/// Sum over records of even*ln L(0) + odd*ln L(1), probabilities clamped
/// to [1e-12, 1 - 1e-12].
double log_likelihood(const ParityDataset& ds, double pi, double f);

/// Joint (pi, f) maximum-likelihood estimate: dense grid scan over
/// [-1,1] x [0,1], then B jittered golden-section refinements seeded from
/// the top-B grid cells; pi_hat is the mean of the refined maximizers.
LikelihoodParams estimate(const ParityDataset& ds, const EstimateOptions& opt,
                          std::uint64_t seed);

/// Least squares of the even-parity model over f in [0,1] with pi fixed,
/// abscissa = layer count. Returns best f and R^2.
FitResult fit_layer_fidelity(std::span<const std::pair<int, double>> points, double pi_known);

/// Same with pi as abscissa and the layer count fixed.
FitResult fit_sweep_fidelity(std::span<const std::pair<double, double>> points, int layers);

/// Total cost in executions of A: M(Lmax+1) + M n_O Lmax / (2 n_A).
double runtime_units(double total_shots, int lmax, double n_reflection, double n_ansatz);

/// Mean, bias, RMSE and their standard errors (delta method) over repeated
/// estimates against a known truth.
EstimateSummary summarize(std::span<const double> estimates, double truth, double runtime);

}  // namespace rcrae
