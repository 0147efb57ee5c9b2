#include "needlet/variance.hpp"

#include <cmath>
#include <stdexcept>

#include "needlet/coeffs.hpp"
#include "residue_sums.hpp"

namespace needlet {

VarianceSet variances_from_weights(std::span<const double> weights, const NeedletScale& scale,
                                   VarianceMode mode) {
  if (weights.size() != scale.l_max() + 1) {
    throw std::invalid_argument("variance weights must cover l = 0..N/2");
  }
  const double sigma2 = variance_from_weights(weights, scale);
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("coefficient variance is zero; statistics cannot be normalized");
  }
  const auto weighting =
      mode == VarianceMode::Theoretical ? detail::TupleWeighting::Plain : detail::TupleWeighting::InverseDelta;
  const auto sums = detail::variance_residue_sums(weights, static_cast<long>(scale.N), weighting);

  const double n = static_cast<double>(scale.N);
  const double s4 = sigma2 * sigma2;
  VarianceSet out;
  out.mode = mode;
  out.sigma2 = sigma2;
  out.var_S = 6.0 * sums.order3 / (s4 * sigma2 * n * n);
  out.var_U1 = 72.0 * sums.order2 / (s4 * n);
  out.var_U2 = 24.0 * sums.order4 / (s4 * s4 * n * n * n);
  out.var_U = out.var_U1 + out.var_U2;
  return out;
}

VarianceSet var_theoretical(const PowerSpectrum& spectrum, const NeedletScale& scale, const Window& window) {
  return variances_from_weights(weighted_spectrum(spectrum, scale, window), scale, VarianceMode::Theoretical);
}

VarianceSet var_estimated(std::span<const double> periodogram_weights, const NeedletScale& scale) {
  return variances_from_weights(periodogram_weights, scale, VarianceMode::Estimated);
}

double var_skew_theoretical(const PowerSpectrum& spectrum, const NeedletScale& scale, const Window& window) {
  return var_theoretical(spectrum, scale, window).var_S;
}

std::pair<double, double> var_kurt_theoretical(const PowerSpectrum& spectrum, const NeedletScale& scale,
                                               const Window& window) {
  const auto v = var_theoretical(spectrum, scale, window);
  return {v.var_U1, v.var_U2};
}

double var_skew_estimated(std::span<const double> periodogram_weights, const NeedletScale& scale) {
  return var_estimated(periodogram_weights, scale).var_S;
}

std::pair<double, double> var_kurt_estimated(std::span<const double> periodogram_weights,
                                             const NeedletScale& scale) {
  const auto v = var_estimated(periodogram_weights, scale);
  return {v.var_U1, v.var_U2};
}

}  // namespace needlet
