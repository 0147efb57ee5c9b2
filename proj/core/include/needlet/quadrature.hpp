#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace needlet {

/// Equal-weight rule on m+1 equispaced nodes 2*pi*l/(m+1). Integrates every
/// trigonometric polynomial of degree <= m exactly against dx/(2*pi).
struct QuadratureRule {
  std::size_t degree = 0;
  std::vector<double> points;
  std::vector<double> weights;
};

QuadratureRule quadrature(std::size_t m);

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);
std::complex<double> integrate_complex(const QuadratureRule& rule,
                                       const std::function<std::complex<double>(double)>& f);

}  // namespace needlet
