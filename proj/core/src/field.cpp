#include "needlet/field.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "fft.hpp"

namespace needlet {

std::complex<double> SpectralField::coeff(long l) const {
  const auto m = static_cast<std::size_t>(l < 0 ? -l : l);
  if (m == 0 || m > l_max) return {0.0, 0.0};
  return l < 0 ? std::conj(w[m]) : w[m];
}

SpectralField synthesize(const PowerSpectrum& spectrum, std::size_t l_max, RandomStream& rng) {
  if (l_max < 1) throw std::invalid_argument("synthesize needs l_max >= 1");
  SpectralField field;
  field.l_max = l_max;
  field.w.assign(l_max + 1, {0.0, 0.0});
  field.spectrum = spectrum;
  field.seed = rng.seed();
  for (std::size_t l = 1; l <= l_max; ++l) {
    const double sd = std::sqrt(0.5 * spectrum.c_l(static_cast<long>(l)));
    const double re = rng.normal();
    const double im = rng.normal();
    field.w[l] = {sd * re, sd * im};
  }
  return field;
}

SpectralField make_field(std::vector<std::complex<double>> w) {
  if (w.size() < 2) throw std::invalid_argument("make_field needs coefficients for l >= 1");
  SpectralField field;
  field.l_max = w.size() - 1;
  field.w = std::move(w);
  field.w[0] = {0.0, 0.0};
  return field;
}

GridSample evaluate_grid(const SpectralField& field, std::size_t M) {
  if (M < 1) throw std::invalid_argument("grid size M must be >= 1");
  std::vector<std::complex<double>> bins(M);
  for (std::size_t l = 1; l <= field.l_max; ++l) {
    bins[l % M] += field.w[l];
    bins[(M - l % M) % M] += std::conj(field.w[l]);
  }
  fft::transform(bins, fft::Sign::Backward);
  GridSample out;
  out.M = M;
  out.values.resize(M);
  for (std::size_t m = 0; m < M; ++m) out.values[m] = bins[m].real();
  return out;
}

}  // namespace needlet
