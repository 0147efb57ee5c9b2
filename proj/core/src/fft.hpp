#pragma once

#include <complex>
#include <span>
#include <vector>

namespace needlet::fft {

enum class Sign {
  Forward,   // sum_n x_n e^{-2 pi i k n / size}
  Backward,  // sum_n x_n e^{+2 pi i k n / size}
};

/// Unnormalized in-place DFT of arbitrary length.
void transform(std::vector<std::complex<double>>& data, Sign sign);

/// Linear convolution (a * b)[n] = sum_m a[m] b[n - m], length |a| + |b| - 1.
std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

}  // namespace needlet::fft
