#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "needlet/rng.hpp"
#include "needlet/spectrum.hpp"

namespace needlet {

/// One realization X(theta) = sum_{0 < |l| <= l_max} w_l e^{il theta} of a
/// real stationary field. Only l >= 1 is stored; w_{-l} = conj(w_l), w_0 = 0.
struct SpectralField {
  std::size_t l_max = 0;
  /// w[l] for l = 0..l_max; w[0] == 0.
  std::vector<std::complex<double>> w;
  std::optional<PowerSpectrum> spectrum;
  std::optional<std::uint64_t> seed;

  std::complex<double> coeff(long l) const;
};

/// Draws Re w_l, Im w_l ~ N(0, C_l / 2) independently for l = 1..l_max,
/// in that order, from `rng`.
SpectralField synthesize(const PowerSpectrum& spectrum, std::size_t l_max, RandomStream& rng);

/// Field with explicitly given coefficients (w[0] is forced to 0).
SpectralField make_field(std::vector<std::complex<double>> w);

/// Values X(2 pi m / M), m = 0..M-1.
struct GridSample {
  std::size_t M = 0;
  std::vector<double> values;
};

/// Evaluates the field on M equispaced points by folding l mod M and one
/// length-M inverse transform. M < 2 l_max reproduces aliasing exactly.
GridSample evaluate_grid(const SpectralField& field, std::size_t M);

}  // namespace needlet
