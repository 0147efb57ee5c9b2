#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "needlet/window.hpp"

namespace needlet {

/// f(x) = sum_{|l| <= degree} coeff(l) e^{ilx}; coefficients stored at
/// index l + degree.
class TrigPolynomial {
 public:
  TrigPolynomial() = default;
  explicit TrigPolynomial(std::size_t degree);
  TrigPolynomial(std::size_t degree, std::vector<std::complex<double>> coefficients);

  std::size_t degree() const { return degree_; }
  std::complex<double> coeff(long l) const;
  void set_coeff(long l, std::complex<double> value);

  std::complex<double> operator()(double x) const;

  /// ||f||^2 under dx/(2 pi), i.e. sum_l |coeff(l)|^2.
  double energy() const;

  /// Largest |l| with a nonzero coefficient (0 for constants or zero).
  std::size_t effective_degree() const;

 private:
  std::size_t degree_ = 0;
  std::vector<std::complex<double>> coeffs_ = {0.0};
};

/// Tight-frame energy bookkeeping for a band-limited f at truncation level J.
struct FrameEnergy {
  double norm2 = 0.0;            // ||f||^2
  double constant_term = 0.0;    // |<f, psi_0>|^2
  double needlet_energy = 0.0;   // sum_{j<=J, eta} |<f, psi_{j,eta}>|^2
  double discrepancy = 0.0;      // |norm2 - constant_term - needlet_energy|
};

/// Computes every needlet coefficient <f, psi_{j,eta}>, j = 0..J, eta on
/// the 2^(j+2)-point grid, in the spectral domain. Throws
/// std::invalid_argument when f has frequency content above 2^J, which the
/// truncated frame cannot reproduce.
FrameEnergy frame_energy(const TrigPolynomial& f, int J, const Window& window = default_window());

/// Absolute discrepancy of the tight-frame energy identity.
double tight_frame_check(const TrigPolynomial& f, int J, const Window& window = default_window());

}  // namespace needlet
