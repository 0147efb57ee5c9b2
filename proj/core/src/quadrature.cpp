#include "needlet/quadrature.hpp"

#include <numbers>

namespace needlet {

QuadratureRule quadrature(std::size_t m) {
  QuadratureRule rule;
  rule.degree = m;
  const std::size_t n = m + 1;
  rule.points.resize(n);
  rule.weights.assign(n, 1.0 / static_cast<double>(n));
  for (std::size_t l = 0; l < n; ++l) {
    rule.points[l] = 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(n);
  }
  return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) sum += rule.weights[i] * f(rule.points[i]);
  return sum;
}

std::complex<double> integrate_complex(const QuadratureRule& rule,
                                       const std::function<std::complex<double>(double)>& f) {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < rule.points.size(); ++i) sum += rule.weights[i] * f(rule.points[i]);
  return sum;
}

}  // namespace needlet
