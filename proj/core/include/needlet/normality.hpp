#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

namespace needlet {

/// Equal-width bins over [lo, hi]; values outside are clipped into the end
/// bins and counted separately, so counts always sum to the sample size.
struct Histogram {
  double lo = -4.0;
  double hi = 4.0;
  std::vector<std::size_t> counts;
  std::size_t clipped_low = 0;
  std::size_t clipped_high = 0;

  double width() const { return (hi - lo) / static_cast<double>(counts.size()); }
};

Histogram make_histogram(std::span<const double> values, std::size_t bins = 30, double lo = -4.0,
                         double hi = 4.0);

struct NormalityDiagnostics {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double ks_statistic = 0.0;
  double ks_p = 1.0;
  Histogram histogram;
};

/// Moments, KS test against N(0,1) and the default 30-bin histogram.
/// Throws std::invalid_argument on fewer than two values.
NormalityDiagnostics normality_diagnostics(std::span<const double> values);

double normal_cdf(double x);

/// sup_x |F_n(x) - F(x)|.
double ks_statistic(std::span<const double> values, const std::function<double(double)>& cdf);

/// P(D_n > d) from the Kolmogorov series with Stephens' small-sample
/// correction lambda = (sqrt(n) + 0.12 + 0.11/sqrt(n)) d.
double ks_pvalue(double d, std::size_t n);

/// Sample Pearson correlation.
double correlation(std::span<const double> x, std::span<const double> y);

/// CSV with columns bin_left,bin_right,count,normal_density; the density is
/// the N(0,1) expected count at the bin midpoint (n * width * pdf). Throws
/// std::invalid_argument for an empty sample or bins < 2, std::runtime_error
/// if the file cannot be written.
void emit_histogram(std::span<const double> values, std::size_t bins, const std::filesystem::path& path);

}  // namespace needlet
