#pragma once

// Slow, definition-level reference computations. Nothing here calls the
// library's fast paths (FFT, convolution at residue targets, Moebius
// inversion); only the window a(.) and psi_N evaluation are shared.

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// K_N(t) = |sum_{k=1}^N e^{itk}|^2 / (2 pi N), summed term by term.
inline double fejer_direct(std::size_t N, double t) {
  std::complex<double> s = 0.0;
  for (std::size_t k = 1; k <= N; ++k) s += std::polar(1.0, t * static_cast<double>(k));
  return std::norm(s) / (2.0 * kPi * static_cast<double>(N));
}

/// Signed frequencies 0 < |l| <= N/2 with weight v[|l|] != 0.
inline std::vector<std::pair<long, double>> signed_support(const std::vector<double>& v) {
  std::vector<std::pair<long, double>> out;
  for (std::size_t l = 1; l < v.size(); ++l) {
    if (v[l] == 0.0) continue;
    out.emplace_back(static_cast<long>(l), v[l]);
    out.emplace_back(-static_cast<long>(l), v[l]);
  }
  return out;
}

/// prod over groups of equal |l| of (group size)!, counted by hand.
inline double delta_direct(std::initializer_list<long> ls) {
  std::map<long, int> groups;
  for (long l : ls) ++groups[std::abs(l)];
  double d = 1.0;
  for (const auto& [l, n] : groups) {
    for (int i = 2; i <= n; ++i) d *= i;
  }
  return d;
}

struct Variances {
  double sigma2 = 0.0;
  double var_S = 0.0;
  double var_U1 = 0.0;
  double var_U2 = 0.0;
};

/// The Fejer-kernel sums exactly as written: tuples over all signed l with
/// the kernel evaluated at (l_1 + ... + l_p) tau, prefactors 12 pi / N^3,
/// 72 * 2 pi / N^2 and 24 * 2 pi / N^4. `inverse_delta` weights each tuple
/// by 1 / delta (plug-in estimators).
inline Variances fejer_sums(const std::vector<double>& v, std::size_t N, bool inverse_delta) {
  const auto sup = signed_support(v);
  const double n = static_cast<double>(N);
  const double tau = 2.0 * kPi / n;
  Variances out;
  for (const auto& [l, w] : sup) out.sigma2 += w;
  out.sigma2 /= n;

  // the kernel only ever sees integer multiples of tau
  std::map<long, double> kernel;
  auto K = [&](long s) {
    auto it = kernel.find(s);
    if (it != kernel.end()) return it->second;
    return kernel[s] = fejer_direct(N, tau * static_cast<double>(s));
  };

  double s2 = 0.0, s3 = 0.0, s4 = 0.0;
  for (const auto& [l1, w1] : sup) {
    for (const auto& [l2, w2] : sup) {
      s2 += w1 * w2 * K(l1 + l2) / (inverse_delta ? delta_direct({l1, l2}) : 1.0);
      for (const auto& [l3, w3] : sup) {
        s3 += w1 * w2 * w3 * K(l1 + l2 + l3) / (inverse_delta ? delta_direct({l1, l2, l3}) : 1.0);
        for (const auto& [l4, w4] : sup) {
          s4 += w1 * w2 * w3 * w4 * K(l1 + l2 + l3 + l4) /
                (inverse_delta ? delta_direct({l1, l2, l3, l4}) : 1.0);
        }
      }
    }
  }
  const double s = out.sigma2;
  out.var_S = 12.0 * kPi / (s * s * s * n * n * n) * s3;
  out.var_U1 = 72.0 / (s * s) * 2.0 * kPi / (n * n) * s2;
  out.var_U2 = 24.0 / (s * s * s * s) * 2.0 * kPi / (n * n * n * n) * s4;
  return out;
}

/// Cov(beta_{k1}, beta_{k2}) for k1 - k2 = d: (1/N) sum_{signed l} v(l) e^{ild tau}.
inline std::vector<double> covariance_sequence(const std::vector<double>& v, std::size_t N) {
  const double tau = 2.0 * kPi / static_cast<double>(N);
  std::vector<double> r(N, 0.0);
  for (std::size_t d = 0; d < N; ++d) {
    for (std::size_t l = 1; l < v.size(); ++l) {
      r[d] += 2.0 * v[l] * std::cos(static_cast<double>(l * d) * tau);
    }
    r[d] /= static_cast<double>(N);
  }
  return r;
}

/// Gaussian moment (diagram) identities for the normalized coefficients:
///   E S_N^2 = (1/N) sum_{k1,k2} 6 rho^3,
///   E U_N^2 = (1/N) sum_{k1,k2} (72 rho^2 + 24 rho^4),  rho = r / sigma^2.
/// The 9 rho term of E S_N^2 vanishes because sum_k beta_k = 0.
inline Variances diagram(const std::vector<double>& v, std::size_t N) {
  const auto r = covariance_sequence(v, N);
  Variances out;
  out.sigma2 = r[0];
  double s3 = 0.0, s2 = 0.0, s4 = 0.0;
  for (std::size_t k1 = 0; k1 < N; ++k1) {
    for (std::size_t k2 = 0; k2 < N; ++k2) {
      const double rho = r[(k1 + N - k2) % N] / r[0];
      s2 += rho * rho;
      s3 += rho * rho * rho;
      s4 += rho * rho * rho * rho;
    }
  }
  const double n = static_cast<double>(N);
  out.var_S = 6.0 * s3 / n;
  out.var_U1 = 72.0 * s2 / n;
  out.var_U2 = 24.0 * s4 / n;
  return out;
}

/// X(theta) = sum_{0<|l|<=L} w_l e^{il theta}, summed directly.
inline double field_at(const std::vector<std::complex<double>>& w, double theta) {
  double x = 0.0;
  for (std::size_t l = 1; l < w.size(); ++l) {
    x += 2.0 * (w[l] * std::polar(1.0, static_cast<double>(l) * theta)).real();
  }
  return x;
}

/// beta_{N,k} = N^{-1/2} sum_{|l|} w_l a(4|l|/N) e^{-ilk tau}, term by term.
template <class WindowA>
std::vector<double> beta_direct(const std::vector<std::complex<double>>& w, std::size_t N, WindowA a) {
  const double tau = 2.0 * kPi / static_cast<double>(N);
  std::vector<double> beta(N, 0.0);
  for (std::size_t k = 0; k < N; ++k) {
    std::complex<double> s = 0.0;
    for (std::size_t l = 1; l <= N / 2 && l < w.size(); ++l) {
      const double weight = a(4.0 * static_cast<double>(l) / static_cast<double>(N));
      const double phase = -static_cast<double>(l * k) * tau;
      s += weight * w[l] * std::polar(1.0, phase);
      s += weight * std::conj(w[l]) * std::polar(1.0, -phase);
    }
    beta[k] = s.real() / std::sqrt(static_cast<double>(N));
  }
  return beta;
}

/// Grid values with the spectrum folded by hand: X(2 pi m / M).
inline std::vector<double> grid_direct(const std::vector<std::complex<double>>& w, std::size_t M) {
  std::vector<double> out(M);
  for (std::size_t m = 0; m < M; ++m) out[m] = field_at(w, 2.0 * kPi * static_cast<double>(m) / static_cast<double>(M));
  return out;
}

}  // namespace oracle
