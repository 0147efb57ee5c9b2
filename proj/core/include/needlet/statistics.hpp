#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace needlet {

/// Sample mean, skewness and kurtosis statistics of normalized coefficients
/// b_k = beta_k / sigma:
///   M_N = (1/N) sum b_k,  S_N = N^{-1/2} sum b_k^3,  U_N = N^{-1/2} sum (b_k^4 - 3).
struct TestStatistics {
  double mean = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
};

/// beta / sqrt(sigma2); throws std::invalid_argument unless sigma2 > 0.
std::vector<double> normalize(std::span<const double> beta, double sigma2);

double sample_mean(std::span<const double> normalized);
double skewness_stat(std::span<const double> normalized);
double kurtosis_stat(std::span<const double> normalized);

TestStatistics compute_statistics(std::span<const double> beta, double sigma2);

/// Fejer kernel K_N(t) = sin^2(Nt/2) / (2 pi N sin^2(t/2)), equal to
/// N / (2 pi) at t = 0 mod 2 pi.
double fejer(std::size_t N, double t);

/// E prod_i |w_{l_i}|^2 / C_{l_i} for exponential |w|^2 / C: the product
/// over groups of equal |l| of (group size)!.
std::uint64_t delta(std::span<const long> l_values);

}  // namespace needlet
