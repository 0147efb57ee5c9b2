#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "needlet/field.hpp"
#include "needlet/scale.hpp"
#include "needlet/spectrum.hpp"
#include "needlet/window.hpp"

namespace needlet {

enum class CoefficientSource { ExactSpectral, GridAliased };

/// beta_{N,k}, k = 0..N-1, with the variance sigma2 used to normalize them.
struct WaveletCoefficients {
  NeedletScale scale;
  std::vector<double> beta;
  double sigma2 = 0.0;
  CoefficientSource source = CoefficientSource::ExactSpectral;
};

/// w~_l = (1/M) sum_m X(2 pi m / M) e^{-2 pi i m l / M} for l = 0..l_max_used.
struct EmpiricalSpectrum {
  std::size_t M = 0;
  std::vector<std::complex<double>> w_tilde;
};

/// beta_{N,k} = N^{-1/2} sum_{N/8 <= |l| <= N/2} w_l a(4|l|/N) e^{-ilk tau}
/// for all k through one length-N transform. `w` is indexed by l >= 0 and
/// must reach l = N/2; negative l come from Hermitian symmetry.
std::vector<double> beta_from_spectrum(std::span<const std::complex<double>> w, const NeedletScale& scale,
                                       const Window& window = default_window());

/// Needs field.l_max >= N/2. sigma2 is the theoretical sigma_N^2 when the
/// field carries its spectrum, otherwise the plug-in estimate.
WaveletCoefficients beta_exact(const SpectralField& field, const NeedletScale& scale,
                               const Window& window = default_window());

EmpiricalSpectrum w_discrete(const GridSample& samples, std::size_t l_max_used);

/// beta~_{N,k} = (1/M) sum_m X(2 pi m/M) psi_N(2 pi m/M + k tau), evaluated
/// as beta_from_spectrum applied to w~. Requires M >= N. sigma2 is the
/// plug-in estimate from w~ (the only information the samples carry).
WaveletCoefficients beta_discrete(const GridSample& samples, const NeedletScale& scale,
                                  const Window& window = default_window());

/// v(l) = C_l a^2(4l/N) for l = 0..N/2 (v(0) = 0).
std::vector<double> weighted_spectrum(const PowerSpectrum& spectrum, const NeedletScale& scale,
                                      const Window& window = default_window());

/// u(l) = |w_l|^2 a^2(4l/N) for l = 0..N/2.
std::vector<double> weighted_periodogram(std::span<const std::complex<double>> w, const NeedletScale& scale,
                                         const Window& window = default_window());

/// Recovers u(l) = |w_l|^2 a^2(4l/N) from the coefficients alone:
/// u(l) = N |(1/N) sum_k beta_k e^{ilk tau}|^2.
std::vector<double> periodogram_from_beta(std::span<const double> beta, const NeedletScale& scale);

/// (2/N) sum_{l=1}^{N/2} weights[l]: sigma_N^2 for v, its estimate for u.
double variance_from_weights(std::span<const double> weights, const NeedletScale& scale);

/// sigma_N^2 = (2/N) sum_{N/8 <= l <= N/2} C_l a^2(4l/N).
double sigma2_N(const PowerSpectrum& spectrum, const NeedletScale& scale,
                const Window& window = default_window());

/// sigma^_N^2 = (2/N) sum_{N/8 <= l <= N/2} |w_l|^2 a^2(4l/N).
double sigma2_hat_N(std::span<const std::complex<double>> w, const NeedletScale& scale,
                    const Window& window = default_window());

/// Corr(beta_{N,k1}, beta_{N,k2}) for k1 - k2 = dk.
double corr_beta(const PowerSpectrum& spectrum, const NeedletScale& scale, long dk,
                 const Window& window = default_window());

/// max over lags of |Corr(dk)| (1 + [dk]_{N/2})^exponent, with [dk]_{N/2}
/// the circular lag distance in [0, N/2].
struct CorrelationDecay {
  double max_weighted = 0.0;
  long argmax_lag = 0;
  std::vector<double> correlation;  // Corr(dk), dk = 0..N-1
};

CorrelationDecay correlation_decay(const PowerSpectrum& spectrum, const NeedletScale& scale, int exponent,
                                   const Window& window = default_window());

}  // namespace needlet
