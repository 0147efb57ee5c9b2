#include "needlet/frame_check.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fft.hpp"

namespace needlet {

TrigPolynomial::TrigPolynomial(std::size_t degree) : degree_(degree), coeffs_(2 * degree + 1) {}

TrigPolynomial::TrigPolynomial(std::size_t degree, std::vector<std::complex<double>> coefficients)
    : degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != 2 * degree_ + 1) {
    throw std::invalid_argument("TrigPolynomial needs 2*degree+1 coefficients");
  }
}

std::complex<double> TrigPolynomial::coeff(long l) const {
  const long d = static_cast<long>(degree_);
  if (l < -d || l > d) return {0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(l + d)];
}

void TrigPolynomial::set_coeff(long l, std::complex<double> value) {
  const long d = static_cast<long>(degree_);
  if (l < -d || l > d) throw std::out_of_range("coefficient index beyond polynomial degree");
  coeffs_[static_cast<std::size_t>(l + d)] = value;
}

std::complex<double> TrigPolynomial::operator()(double x) const {
  std::complex<double> sum{0.0, 0.0};
  const long d = static_cast<long>(degree_);
  for (long l = -d; l <= d; ++l) sum += coeff(l) * std::polar(1.0, static_cast<double>(l) * x);
  return sum;
}

double TrigPolynomial::energy() const {
  double e = 0.0;
  for (const auto& c : coeffs_) e += std::norm(c);
  return e;
}

std::size_t TrigPolynomial::effective_degree() const {
  for (std::size_t l = degree_; l > 0; --l) {
    const long sl = static_cast<long>(l);
    if (coeff(sl) != std::complex<double>{} || coeff(-sl) != std::complex<double>{}) return l;
  }
  return 0;
}

FrameEnergy frame_energy(const TrigPolynomial& f, int J, const Window& window) {
  if (J < 0 || J > 24) throw std::invalid_argument("frame level J must be in [0, 24]");
  const std::size_t band = std::size_t{1} << J;
  if (f.effective_degree() > band) {
    std::ostringstream msg;
    msg << "test function has frequency " << f.effective_degree()
        << " above 2^J = " << band << "; the truncated frame cannot reproduce it";
    throw std::invalid_argument(msg.str());
  }

  FrameEnergy out;
  out.norm2 = f.energy();
  out.constant_term = std::norm(f.coeff(0));

  const long d = static_cast<long>(f.degree());
  for (int j = 0; j <= J; ++j) {
    // psi_{j,eta}(x) = 2^{-(j/2+1)} sum_l a(l/2^j) e^{il(x - eta)}, eta = 2 pi k / 2^{j+2};
    // <f, psi_{j,eta}> = 2^{-(j/2+1)} sum_l f_l a(l/2^j) e^{il eta}.
    const std::size_t n = std::size_t{4} << j;
    const double scale = std::ldexp(1.0, j);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<std::complex<double>> bins(n);
    for (long l = -d; l <= d; ++l) {
      const double w = window.a(static_cast<double>(l) / scale);
      if (w == 0.0) continue;
      const long idx = ((l % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
      bins[static_cast<std::size_t>(idx)] += f.coeff(l) * w;
    }
    fft::transform(bins, fft::Sign::Backward);
    for (const auto& c : bins) out.needlet_energy += std::norm(c * norm);
  }
  out.discrepancy = std::abs(out.norm2 - out.constant_term - out.needlet_energy);
  return out;
}

double tight_frame_check(const TrigPolynomial& f, int J, const Window& window) {
  return frame_energy(f, J, window).discrepancy;
}

}  // namespace needlet
