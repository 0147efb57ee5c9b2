#pragma once

#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace needlet {

/// Resolution level j with N = 2^(j+2) coefficients on the grid k*tau,
/// tau = 2*pi/N. The window weight a(4l/N) is nonzero only for
/// N/8 < |l| < N/2.
struct NeedletScale {
  int j = 0;
  std::size_t N = 4;
  double tau = std::numbers::pi / 2.0;

  static NeedletScale from_level(int level) {
    if (level < 0 || level > 28) throw std::invalid_argument("level j must be in [0, 28]");
    NeedletScale s;
    s.j = level;
    s.N = std::size_t{1} << (level + 2);
    s.tau = 2.0 * std::numbers::pi / static_cast<double>(s.N);
    return s;
  }

  /// Smallest and largest |l| that can carry weight (inclusive loop bounds;
  /// the endpoints themselves have a(.) = 0).
  std::size_t l_min() const { return N / 8; }
  std::size_t l_max() const { return N / 2; }

  /// The argument 4l/N of the window for frequency l.
  double window_arg(long l) const { return 4.0 * static_cast<double>(l) / static_cast<double>(N); }
};

}  // namespace needlet
