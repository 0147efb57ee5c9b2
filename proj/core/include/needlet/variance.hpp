#pragma once

#include <span>
#include <utility>

#include "needlet/scale.hpp"
#include "needlet/spectrum.hpp"
#include "needlet/window.hpp"

namespace needlet {

enum class VarianceMode { Theoretical, Estimated };

/// Asymptotic variances of S_N and U_N = sigma^2_{1U} + sigma^2_{2U}.
///
/// With v(l) the weighted spectrum over signed l and sigma^2 = (1/N) sum v,
/// only Fejer arguments at multiples of N survive, leaving
///   var_S  =  6 / (sigma^6 N^2) * sum_{l1+l2+l3 in {0, +-N}} v v v
///   var_U1 = 72 / (sigma^4 N)   * sum_{l1+l2 in {0, +-N}} v v
///   var_U2 = 24 / (sigma^8 N^3) * sum_{l1+..+l4 in {0, +-N, +-2N}} v v v v.
/// The estimated set uses |w_l|^2 a^2 in place of C_l a^2 and weights each
/// tuple by 1/delta of its |l| multiset.
struct VarianceSet {
  double var_S = 0.0;
  double var_U1 = 0.0;
  double var_U2 = 0.0;
  double var_U = 0.0;
  double sigma2 = 0.0;
  VarianceMode mode = VarianceMode::Theoretical;
};

/// `weights[l]`, l = 0..N/2, is C_l a^2(4l/N) (theoretical) or
/// |w_l|^2 a^2(4l/N) (estimated).
VarianceSet variances_from_weights(std::span<const double> weights, const NeedletScale& scale,
                                   VarianceMode mode);

VarianceSet var_theoretical(const PowerSpectrum& spectrum, const NeedletScale& scale,
                            const Window& window = default_window());

/// Plug-in set from u(l) = |w_l|^2 a^2(4l/N); throws std::invalid_argument
/// when the implied sigma^_N^2 is zero.
VarianceSet var_estimated(std::span<const double> periodogram_weights, const NeedletScale& scale);

double var_skew_theoretical(const PowerSpectrum& spectrum, const NeedletScale& scale,
                            const Window& window = default_window());
std::pair<double, double> var_kurt_theoretical(const PowerSpectrum& spectrum, const NeedletScale& scale,
                                               const Window& window = default_window());
double var_skew_estimated(std::span<const double> periodogram_weights, const NeedletScale& scale);
std::pair<double, double> var_kurt_estimated(std::span<const double> periodogram_weights,
                                             const NeedletScale& scale);

}  // namespace needlet
