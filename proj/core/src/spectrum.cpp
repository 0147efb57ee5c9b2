#include "needlet/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace needlet {

PowerSpectrum::PowerSpectrum(double alpha, Modulation g, std::string description)
    : alpha_(alpha), g_(std::move(g)), description_(std::move(description)) {
  if (!(alpha_ > 1.0) || !std::isfinite(alpha_)) {
    throw std::invalid_argument("alpha must be a finite value > 1 for a summable spectrum");
  }
  if (!g_) throw std::invalid_argument("spectrum modulation g is empty");
}

PowerSpectrum PowerSpectrum::power_law(double alpha) {
  return PowerSpectrum(alpha, [](std::size_t) { return 1.0; }, "const");
}

PowerSpectrum PowerSpectrum::cosine(double alpha, double b0, double b1, double omega) {
  if (!(b0 - std::abs(b1) > 0.0)) {
    throw std::invalid_argument("cosine modulation needs b0 > |b1| to stay bounded away from 0");
  }
  std::ostringstream desc;
  desc << "cosine:" << b0 << ',' << b1 << ',' << omega;
  return PowerSpectrum(
      alpha, [=](std::size_t l) { return b0 + b1 * std::cos(omega * static_cast<double>(l)); },
      desc.str());
}

PowerSpectrum PowerSpectrum::tabulated(double alpha, std::map<std::size_t, double> table) {
  if (table.empty()) throw std::invalid_argument("tabulated modulation is empty");
  auto shared = std::make_shared<const std::map<std::size_t, double>>(std::move(table));
  return PowerSpectrum(
      alpha,
      [shared](std::size_t l) {
        const auto it = shared->find(l);
        if (it == shared->end()) {
          throw std::out_of_range("tabulated g has no entry for l = " + std::to_string(l));
        }
        return it->second;
      },
      "table");
}

PowerSpectrum PowerSpectrum::custom(double alpha, Modulation g, std::string description) {
  return PowerSpectrum(alpha, std::move(g), std::move(description));
}

double PowerSpectrum::c_l(long l) const {
  if (l == 0) throw std::domain_error("C_l is undefined at l = 0 (the field has w_0 = 0)");
  const auto m = static_cast<std::size_t>(l < 0 ? -l : l);
  return g_(m) * std::pow(static_cast<double>(m), -alpha_);
}

PowerSpectrum PowerSpectrum::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
  auto inner = g_;
  std::ostringstream desc;
  desc << description_ << "*" << factor;
  return PowerSpectrum(alpha_, [inner, factor](std::size_t l) { return factor * inner(l); },
                       desc.str());
}

A1Report validate_a1(const PowerSpectrum& spectrum, std::size_t l_max) {
  if (l_max < 8) throw std::invalid_argument("validate_a1 needs l_max >= 8");
  A1Report report;
  double lo[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  double hi[2] = {0.0, 0.0};
  const std::size_t half = l_max / 2;
  for (std::size_t l = 1; l <= l_max; ++l) {
    const double v = spectrum.g(l);
    if (!std::isfinite(v) || v <= 0.0) {
      report.offending_index = l;
      report.c1_hat = std::isfinite(v) ? std::min(v, lo[0]) : v;
      report.c2_hat = std::max(hi[0], hi[1]);
      report.ok = false;
      return report;
    }
    const int part = l <= half ? 0 : 1;
    lo[part] = std::min(lo[part], v);
    hi[part] = std::max(hi[part], v);
  }
  report.c1_hat = std::min(lo[0], lo[1]);
  report.c2_hat = std::max(hi[0], hi[1]);
  constexpr double drift = 0.75;
  report.ok = lo[1] >= drift * lo[0] && hi[1] <= hi[0] / drift;
  return report;
}

}  // namespace needlet
