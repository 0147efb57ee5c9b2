#include "needlet/needlet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace needlet {

std::vector<double> needlet_weights(const NeedletScale& scale, const Window& window) {
  std::vector<double> w(scale.l_max() + 1, 0.0);
  for (std::size_t l = scale.l_min(); l <= scale.l_max(); ++l) {
    w[l] = window.a(scale.window_arg(static_cast<long>(l)));
  }
  return w;
}

namespace {

double psi_from_weights(const std::vector<double>& weights, double inv_sqrt_n, double x) {
  double sum = 0.0;
  for (std::size_t l = 1; l < weights.size(); ++l) {
    if (weights[l] != 0.0) sum += weights[l] * std::cos(static_cast<double>(l) * x);
  }
  return 2.0 * inv_sqrt_n * sum;
}

}  // namespace

double psi_eval(const NeedletScale& scale, double x, const Window& window) {
  const auto weights = needlet_weights(scale, window);
  return psi_from_weights(weights, 1.0 / std::sqrt(static_cast<double>(scale.N)), x);
}

double psi_translated(const NeedletScale& scale, std::size_t k, double x, const Window& window) {
  return psi_eval(scale, x - static_cast<double>(k) * scale.tau, window);
}

LocalizationProfile localization_profile(const NeedletScale& scale, int k_decay,
                                         std::size_t grid_points, const Window& window) {
  if (k_decay < 2) throw std::invalid_argument("k_decay must be >= 2");
  if (grid_points < 2) throw std::invalid_argument("localization grid needs at least 2 points");

  const auto weights = needlet_weights(scale, window);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(scale.N));
  const double two_j = std::ldexp(1.0, scale.j);
  const double amplitude = std::sqrt(two_j);

  LocalizationProfile out;
  out.scale = scale;
  out.k_decay = k_decay;
  out.rows.resize(grid_points);

  // grid_points equispaced points covering [-pi, pi] inclusive
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid_points - 1);
  double c = 0.0;
  std::vector<double> envelope(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double x = -std::numbers::pi + step * static_cast<double>(i);
    const double value = std::abs(psi_from_weights(weights, inv_sqrt_n, x));
    envelope[i] = amplitude / std::pow(1.0 + two_j * std::abs(x), k_decay);
    out.rows[i].x = x;
    out.rows[i].abs_psi = value;
    c = std::max(c, value / envelope[i]);
  }
  out.fitted_constant = c;
  for (std::size_t i = 0; i < grid_points; ++i) out.rows[i].bound = c * envelope[i];
  return out;
}

}  // namespace needlet
