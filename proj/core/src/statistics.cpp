#include "needlet/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace needlet {

std::vector<double> normalize(std::span<const double> beta, double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("normalizing variance must be positive and finite");
  }
  const double inv = 1.0 / std::sqrt(sigma2);
  std::vector<double> out(beta.size());
  std::transform(beta.begin(), beta.end(), out.begin(), [inv](double b) { return b * inv; });
  return out;
}

double sample_mean(std::span<const double> normalized) {
  if (normalized.empty()) throw std::invalid_argument("no coefficients");
  double sum = 0.0;
  for (double b : normalized) sum += b;
  return sum / static_cast<double>(normalized.size());
}

double skewness_stat(std::span<const double> normalized) {
  if (normalized.empty()) throw std::invalid_argument("no coefficients");
  double sum = 0.0;
  for (double b : normalized) sum += b * b * b;
  return sum / std::sqrt(static_cast<double>(normalized.size()));
}

double kurtosis_stat(std::span<const double> normalized) {
  if (normalized.empty()) throw std::invalid_argument("no coefficients");
  double sum = 0.0;
  for (double b : normalized) {
    const double b2 = b * b;
    sum += b2 * b2 - 3.0;
  }
  return sum / std::sqrt(static_cast<double>(normalized.size()));
}

TestStatistics compute_statistics(std::span<const double> beta, double sigma2) {
  const auto b = normalize(beta, sigma2);
  return {sample_mean(b), skewness_stat(b), kurtosis_stat(b)};
}

double fejer(std::size_t N, double t) {
  const double n = static_cast<double>(N);
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(t, two_pi);  // in [-pi, pi]
  if (std::abs(r) < 1e-12) return n / two_pi;
  const double num = std::sin(0.5 * n * r);
  const double den = std::sin(0.5 * r);
  return num * num / (two_pi * n * den * den);
}

std::uint64_t delta(std::span<const long> l_values) {
  if (l_values.empty()) throw std::invalid_argument("delta needs a nonempty multiset");
  std::map<long, int> groups;
  for (long l : l_values) ++groups[l < 0 ? -l : l];
  std::uint64_t out = 1;
  for (const auto& [value, size] : groups) {
    for (int i = 2; i <= size; ++i) out *= static_cast<std::uint64_t>(i);
  }
  return out;
}

}  // namespace needlet
