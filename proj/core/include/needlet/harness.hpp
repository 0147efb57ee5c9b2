#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "needlet/normality.hpp"
#include "needlet/spectrum.hpp"
#include "needlet/variance.hpp"

namespace needlet {

/// exact: normalize by sigma_N and compare with the theoretical variances.
/// studentized: everything estimated from the coefficients themselves.
enum class McMode { Exact, Studentized };

/// grid_M == 0: beta from the spectral coefficients (l_max = N/2).
/// grid_M >= N: beta~ from M samples of a field synthesized to l_max = 4M.
/// alternative_lambda: replace the samples by the chi-squared mixture
///   Y = sqrt(1 - lambda) X / sd(X) + sqrt(lambda) (X^2 - E X^2) / sd(X^2)
/// (E X^2 and sd(X^2) = sqrt(2) E X^2 exact for the Gaussian X, field
/// band-limited to N/2, M defaulting to 2N so X^2 is alias-free on the
/// needlet band). lambda = 0 is the Gaussian null.
struct ExperimentConfig {
  std::size_t replications = 1600;
  int j = 10;
  PowerSpectrum spectrum = PowerSpectrum::power_law(4.0);
  McMode mode = McMode::Exact;
  std::size_t grid_M = 0;
  std::optional<double> alternative_lambda;
  std::uint64_t seed = 7;
  std::size_t workers = 1;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const ExperimentConfig& config);

struct ReplicationRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  double M_N = 0.0;
  double S_N = 0.0;
  double U_N = 0.0;
  double z_S = 0.0;
  double z_U = 0.0;
  double p_S = 1.0;
  double p_U = 1.0;
  double p_joint = 1.0;
  // normalization actually used: theoretical in exact mode, estimated otherwise
  double sigma2 = 0.0;
  double var_S = 0.0;
  double var_U = 0.0;  // denominator of z_U
};

struct McResult {
  std::vector<ReplicationRecord> records;  // ordered by replication index
  VarianceSet theoretical;
  NormalityDiagnostics z_S;
  NormalityDiagnostics z_U;
  double corr_zs_zu = 0.0;
  // fraction of replications rejected at the 5% level
  double reject_S = 0.0;
  double reject_U = 0.0;
  double reject_joint = 0.0;
};

/// Runs f(i) for i = 0..count-1 on `workers` threads. Each index is
/// processed exactly once; callers write results into slot i, which makes
/// the outcome independent of scheduling.
template <class F>
void parallel_for(std::size_t count, std::size_t workers, F&& f);

/// One replication (useful on its own for tests and the CLI).
ReplicationRecord run_replication(const ExperimentConfig& config, const VarianceSet& theoretical,
                                  std::size_t index);

McResult run_mc(const ExperimentConfig& config);

struct AliasingRow {
  std::size_t M = 0;
  double ratio = 0.0;           // M / N
  double relative_error = 0.0;  // mean over replications of sum_k |beta - beta~|^2 / (N sigma_N^2)
};

struct AliasingResult {
  std::size_t l_max = 0;
  std::vector<AliasingRow> rows;
  double fitted_exponent = 0.0;  // least-squares slope of log error vs log(M/N)
};

/// Every M must be >= N. Fields are synthesized to l_max = 4 max(M) unless
/// `band_limit` is nonzero, in which case it is used instead.
AliasingResult run_aliasing(const ExperimentConfig& config, const std::vector<std::size_t>& grids,
                            std::size_t band_limit = 0);

/// run_mc with the chi-squared alternative at mixing weight lambda.
McResult run_alternative(ExperimentConfig config, double lambda);

}  // namespace needlet

#include "needlet/detail/parallel_for.hpp"
