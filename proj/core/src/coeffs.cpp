#include "needlet/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fft.hpp"
#include "needlet/error.hpp"

namespace needlet {

std::vector<double> beta_from_spectrum(std::span<const std::complex<double>> w, const NeedletScale& scale,
                                       const Window& window) {
  const std::size_t n = scale.N;
  if (w.size() < scale.l_max() + 1) {
    std::ostringstream msg;
    msg << "needlet coefficients at N = " << n << " need spectral coefficients up to l = " << scale.l_max()
        << " (have l_max = " << (w.empty() ? 0 : w.size() - 1) << ")";
    throw std::invalid_argument(msg.str());
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<std::complex<double>> bins(n);
  for (std::size_t l = std::max<std::size_t>(scale.l_min(), 1); l <= scale.l_max(); ++l) {
    const double a = window.a(scale.window_arg(static_cast<long>(l)));
    if (a == 0.0) continue;
    bins[l] += w[l] * (a * norm);
    bins[n - l] += std::conj(w[l]) * (a * norm);
  }
  fft::transform(bins, fft::Sign::Forward);

  std::vector<double> beta(n);
  double max_abs = 0.0;
  double max_imag = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    beta[k] = bins[k].real();
    max_abs = std::max(max_abs, std::abs(bins[k]));
    max_imag = std::max(max_imag, std::abs(bins[k].imag()));
  }
  if (max_imag > 1e-10 * std::max(max_abs, 1e-300) && max_imag > 1e-300) {
    throw ConsistencyError("needlet coefficients have a non-negligible imaginary residue");
  }
  return beta;
}

WaveletCoefficients beta_exact(const SpectralField& field, const NeedletScale& scale, const Window& window) {
  if (field.l_max < scale.l_max()) {
    std::ostringstream msg;
    msg << "field bandwidth l_max = " << field.l_max << " is insufficient at N = " << scale.N
        << "; required l_max >= " << scale.l_max();
    throw std::invalid_argument(msg.str());
  }
  WaveletCoefficients out;
  out.scale = scale;
  out.beta = beta_from_spectrum(field.w, scale, window);
  out.sigma2 = field.spectrum ? sigma2_N(*field.spectrum, scale, window) : sigma2_hat_N(field.w, scale, window);
  out.source = CoefficientSource::ExactSpectral;
  return out;
}

EmpiricalSpectrum w_discrete(const GridSample& samples, std::size_t l_max_used) {
  if (l_max_used < 1 || 2 * l_max_used > samples.M) {
    throw std::invalid_argument("w_discrete needs 1 <= l_max_used <= M/2");
  }
  std::vector<std::complex<double>> bins(samples.values.begin(), samples.values.end());
  fft::transform(bins, fft::Sign::Forward);
  EmpiricalSpectrum out;
  out.M = samples.M;
  out.w_tilde.resize(l_max_used + 1);
  const double inv_m = 1.0 / static_cast<double>(samples.M);
  for (std::size_t l = 0; l <= l_max_used; ++l) out.w_tilde[l] = bins[l] * inv_m;
  return out;
}

WaveletCoefficients beta_discrete(const GridSample& samples, const NeedletScale& scale, const Window& window) {
  if (samples.M < scale.N) {
    std::ostringstream msg;
    msg << "grid of M = " << samples.M << " samples is coarser than the N = " << scale.N
        << " coefficient lattice";
    throw std::invalid_argument(msg.str());
  }
  const auto spectrum = w_discrete(samples, scale.l_max());
  WaveletCoefficients out;
  out.scale = scale;
  out.beta = beta_from_spectrum(spectrum.w_tilde, scale, window);
  out.sigma2 = sigma2_hat_N(spectrum.w_tilde, scale, window);
  out.source = CoefficientSource::GridAliased;
  return out;
}

std::vector<double> weighted_spectrum(const PowerSpectrum& spectrum, const NeedletScale& scale,
                                      const Window& window) {
  std::vector<double> v(scale.l_max() + 1, 0.0);
  for (std::size_t l = std::max<std::size_t>(scale.l_min(), 1); l <= scale.l_max(); ++l) {
    const double a2 = window.a2(scale.window_arg(static_cast<long>(l)));
    if (a2 > 0.0) v[l] = spectrum.c_l(static_cast<long>(l)) * a2;
  }
  return v;
}

std::vector<double> weighted_periodogram(std::span<const std::complex<double>> w, const NeedletScale& scale,
                                         const Window& window) {
  if (w.size() < scale.l_max() + 1) {
    throw std::invalid_argument("weighted periodogram needs coefficients up to l = N/2");
  }
  std::vector<double> u(scale.l_max() + 1, 0.0);
  for (std::size_t l = std::max<std::size_t>(scale.l_min(), 1); l <= scale.l_max(); ++l) {
    const double a2 = window.a2(scale.window_arg(static_cast<long>(l)));
    if (a2 > 0.0) u[l] = std::norm(w[l]) * a2;
  }
  return u;
}

std::vector<double> periodogram_from_beta(std::span<const double> beta, const NeedletScale& scale) {
  if (beta.size() != scale.N) throw std::invalid_argument("expected N needlet coefficients");
  const std::size_t n = scale.N;
  std::vector<std::complex<double>> bins(beta.begin(), beta.end());
  fft::transform(bins, fft::Sign::Backward);
  std::vector<double> u(scale.l_max() + 1, 0.0);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t l = 1; l <= scale.l_max(); ++l) {
    u[l] = static_cast<double>(n) * std::norm(bins[l] * inv_n);
  }
  // the a(2) = 0 endpoint carries no information
  u[scale.l_max()] = 0.0;
  return u;
}

double variance_from_weights(std::span<const double> weights, const NeedletScale& scale) {
  double sum = 0.0;
  for (std::size_t l = 1; l < weights.size(); ++l) sum += weights[l];
  return 2.0 * sum / static_cast<double>(scale.N);
}

double sigma2_N(const PowerSpectrum& spectrum, const NeedletScale& scale, const Window& window) {
  return variance_from_weights(weighted_spectrum(spectrum, scale, window), scale);
}

double sigma2_hat_N(std::span<const std::complex<double>> w, const NeedletScale& scale, const Window& window) {
  return variance_from_weights(weighted_periodogram(w, scale, window), scale);
}

double corr_beta(const PowerSpectrum& spectrum, const NeedletScale& scale, long dk, const Window& window) {
  const auto v = weighted_spectrum(spectrum, scale, window);
  const long n = static_cast<long>(scale.N);
  const auto lag = static_cast<std::size_t>(((dk % n) + n) % n);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t l = 1; l < v.size(); ++l) {
    num += v[l] * std::cos(static_cast<double>((l * lag) % scale.N) * scale.tau);
    den += v[l];
  }
  return num / den;
}

CorrelationDecay correlation_decay(const PowerSpectrum& spectrum, const NeedletScale& scale, int exponent,
                                   const Window& window) {
  const auto v = weighted_spectrum(spectrum, scale, window);
  double den = 0.0;
  for (std::size_t l = 1; l < v.size(); ++l) den += v[l];

  CorrelationDecay out;
  const std::size_t n = scale.N;
  out.correlation.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    double num = 0.0;
    for (std::size_t l = 1; l < v.size(); ++l) {
      num += v[l] * std::cos(static_cast<double>((l * d) % n) * scale.tau);
    }
    out.correlation[d] = num / den;
    const std::size_t dist = std::min(d, n - d);
    const double weighted = std::abs(out.correlation[d]) * std::pow(1.0 + static_cast<double>(dist), exponent);
    if (weighted > out.max_weighted) {
      out.max_weighted = weighted;
      out.argmax_lag = static_cast<long>(d);
    }
  }
  return out;
}

}  // namespace needlet
