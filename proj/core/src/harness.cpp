#include "needlet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "needlet/coeffs.hpp"
#include "needlet/field.hpp"
#include "needlet/report.hpp"
#include "needlet/rng.hpp"

namespace needlet {

namespace {

ReplicationRecord to_record(const StudentizedReport& r, std::size_t index, std::uint64_t seed) {
  ReplicationRecord rec;
  rec.index = index;
  rec.seed = seed;
  rec.M_N = r.stats.mean;
  rec.S_N = r.stats.skewness;
  rec.U_N = r.stats.kurtosis;
  rec.z_S = r.z_S;
  rec.z_U = r.z_U;
  rec.p_S = r.p_S;
  rec.p_U = r.p_U;
  rec.p_joint = r.p_joint;
  rec.sigma2 = r.variances.sigma2;
  rec.var_S = r.variances.var_S;
  rec.var_U = r.var_z_U;
  return rec;
}

std::vector<double> column(const std::vector<ReplicationRecord>& rows, double ReplicationRecord::*field) {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.*field);
  return out;
}

/// E X^2 = 2 sum_{l=1}^{l_max} C_l for the truncated field.
double field_variance(const PowerSpectrum& spectrum, std::size_t l_max) {
  double s = 0.0;
  for (std::size_t l = 1; l <= l_max; ++l) s += spectrum.c_l(static_cast<long>(l));
  return 2.0 * s;
}

double rejection_rate(const std::vector<ReplicationRecord>& rows, double ReplicationRecord::*p) {
  std::size_t hits = 0;
  for (const auto& r : rows) hits += r.*p < 0.05 ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(rows.size());
}

StudentizedReport analyze(std::span<const double> beta, const NeedletScale& scale, McMode mode,
                          const VarianceSet& theoretical) {
  return mode == McMode::Exact ? test_exact(beta, scale, theoretical) : test_studentized(beta, scale);
}

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.replications < 1) throw std::invalid_argument("--reps must be >= 1");
  if (config.j < 0 || config.j > 20) throw std::invalid_argument("--j must be in [0, 20]");
  if (config.workers < 1) throw std::invalid_argument("--workers must be >= 1");
  const std::size_t n = NeedletScale::from_level(config.j).N;
  if (config.grid_M != 0 && config.grid_M < n) {
    throw std::invalid_argument("--grid must be >= N = " + std::to_string(n));
  }
  if (config.alternative_lambda && !(*config.alternative_lambda >= 0.0 && *config.alternative_lambda <= 1.0)) {
    throw std::invalid_argument("--lambda must be in [0, 1]");
  }
}

ReplicationRecord run_replication(const ExperimentConfig& config, const VarianceSet& theoretical,
                                  std::size_t index) {
  const auto scale = NeedletScale::from_level(config.j);
  const std::uint64_t seed = derive_seed(config.seed, index);
  RandomStream rng(seed);

  if (config.alternative_lambda) {
    const double lambda = *config.alternative_lambda;
    const std::size_t M = std::max(config.grid_M, 2 * scale.N);
    const auto field = synthesize(config.spectrum, scale.l_max(), rng);
    const double ex2 = field_variance(config.spectrum, scale.l_max());
    const double a = std::sqrt((1.0 - lambda) / ex2);
    const double b = std::sqrt(lambda) / (std::sqrt(2.0) * ex2);
    auto samples = evaluate_grid(field, M);
    for (double& x : samples.values) x = a * x + b * (x * x - ex2);
    const auto coeffs = beta_discrete(samples, scale);
    // the alternative has no closed-form spectrum, so it is always studentized
    return to_record(test_studentized(coeffs.beta, scale), index, seed);
  }
  if (config.grid_M != 0) {
    const auto field = synthesize(config.spectrum, 4 * config.grid_M, rng);
    const auto coeffs = beta_discrete(evaluate_grid(field, config.grid_M), scale);
    return to_record(analyze(coeffs.beta, scale, config.mode, theoretical), index, seed);
  }
  const auto field = synthesize(config.spectrum, scale.l_max(), rng);
  const auto beta = beta_from_spectrum(field.w, scale);
  return to_record(analyze(beta, scale, config.mode, theoretical), index, seed);
}

McResult run_mc(const ExperimentConfig& config) {
  validate(config);
  const auto scale = NeedletScale::from_level(config.j);
  McResult result;
  result.theoretical = var_theoretical(config.spectrum, scale);
  result.records.resize(config.replications);
  parallel_for(config.replications, config.workers, [&](std::size_t i) {
    result.records[i] = run_replication(config, result.theoretical, i);
  });
  if (config.replications >= 2) {
    const auto zs = column(result.records, &ReplicationRecord::z_S);
    const auto zu = column(result.records, &ReplicationRecord::z_U);
    result.z_S = normality_diagnostics(zs);
    result.z_U = normality_diagnostics(zu);
    result.corr_zs_zu = correlation(zs, zu);
  }
  result.reject_S = rejection_rate(result.records, &ReplicationRecord::p_S);
  result.reject_U = rejection_rate(result.records, &ReplicationRecord::p_U);
  result.reject_joint = rejection_rate(result.records, &ReplicationRecord::p_joint);
  return result;
}

AliasingResult run_aliasing(const ExperimentConfig& config, const std::vector<std::size_t>& grids,
                            std::size_t band_limit) {
  if (grids.empty()) throw std::invalid_argument("--grids needs at least one M");
  if (config.replications < 1) throw std::invalid_argument("--reps must be >= 1");
  const auto scale = NeedletScale::from_level(config.j);
  for (std::size_t m : grids) {
    if (m < scale.N) throw std::invalid_argument("--grids: every M must be >= N = " + std::to_string(scale.N));
  }
  AliasingResult result;
  result.l_max = band_limit ? band_limit : 4 * *std::max_element(grids.begin(), grids.end());
  if (result.l_max < scale.l_max()) throw std::invalid_argument("band limit below N/2");
  const double sigma2 = sigma2_N(config.spectrum, scale);

  // errors[i * G + g]: replication i, grid g
  std::vector<double> errors(config.replications * grids.size(), 0.0);
  parallel_for(config.replications, config.workers, [&](std::size_t i) {
    RandomStream rng(derive_seed(config.seed, i));
    const auto field = synthesize(config.spectrum, result.l_max, rng);
    const auto beta = beta_from_spectrum(field.w, scale);
    for (std::size_t g = 0; g < grids.size(); ++g) {
      const auto approx = beta_discrete(evaluate_grid(field, grids[g]), scale);
      double e = 0.0;
      for (std::size_t k = 0; k < scale.N; ++k) {
        const double d = beta[k] - approx.beta[k];
        e += d * d;
      }
      errors[i * grids.size() + g] = e / (static_cast<double>(scale.N) * sigma2);
    }
  });

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t g = 0; g < grids.size(); ++g) {
    AliasingRow row;
    row.M = grids[g];
    row.ratio = static_cast<double>(grids[g]) / static_cast<double>(scale.N);
    for (std::size_t i = 0; i < config.replications; ++i) row.relative_error += errors[i * grids.size() + g];
    row.relative_error /= static_cast<double>(config.replications);
    result.rows.push_back(row);
    const double x = std::log(row.ratio);
    const double y = std::log(std::max(row.relative_error, 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double g = static_cast<double>(grids.size());
  const double denom = g * sxx - sx * sx;
  result.fitted_exponent = denom > 0.0 ? (g * sxy - sx * sy) / denom : 0.0;
  return result;
}

McResult run_alternative(ExperimentConfig config, double lambda) {
  config.alternative_lambda = lambda;
  return run_mc(config);
}

}  // namespace needlet
