#pragma once

#include <cstddef>
#include <vector>

#include "needlet/scale.hpp"
#include "needlet/window.hpp"

namespace needlet {

/// psi_N(x) = N^{-1/2} sum_{l != 0} a(4l/N) e^{ilx} = 2 N^{-1/2} sum_{l>0} a(4l/N) cos(lx).
double psi_eval(const NeedletScale& scale, double x, const Window& window = default_window());

/// Translated needlet psi_{N,k}(x) = psi_N(x - k*tau).
double psi_translated(const NeedletScale& scale, std::size_t k, double x,
                      const Window& window = default_window());

/// Spectral weights a(4l/N) for l = 0..N/2 (index = l).
std::vector<double> needlet_weights(const NeedletScale& scale, const Window& window = default_window());

struct LocalizationRow {
  double x = 0.0;
  double abs_psi = 0.0;
  double bound = 0.0;
};

/// |psi_N| on a uniform grid of [-pi, pi] against the envelope
/// c * 2^{j/2} / (1 + 2^j |x|)^k, with c the smallest constant making the
/// envelope hold at every grid point.
struct LocalizationProfile {
  NeedletScale scale;
  int k_decay = 2;
  double fitted_constant = 0.0;
  std::vector<LocalizationRow> rows;
};

inline constexpr std::size_t kLocalizationGridPoints = std::size_t{1} << 14;

LocalizationProfile localization_profile(const NeedletScale& scale, int k_decay,
                                         std::size_t grid_points = kLocalizationGridPoints,
                                         const Window& window = default_window());

}  // namespace needlet
