#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace needlet {

/// Angular power spectrum C_l = g(|l|) |l|^{-alpha}, alpha > 1, with g
/// bounded in [c1, c2] (0 < c1 <= c2). C_0 is undefined: the field has w_0 = 0.
class PowerSpectrum {
 public:
  using Modulation = std::function<double(std::size_t)>;

  /// g == 1.
  static PowerSpectrum power_law(double alpha);
  /// g(l) = b0 + b1 cos(omega l).
  static PowerSpectrum cosine(double alpha, double b0, double b1, double omega);
  /// g tabulated per l; lookups outside the table throw std::out_of_range.
  static PowerSpectrum tabulated(double alpha, std::map<std::size_t, double> table);
  /// Arbitrary g, e.g. for validating candidate models.
  static PowerSpectrum custom(double alpha, Modulation g, std::string description);

  double alpha() const { return alpha_; }
  double g(std::size_t l) const { return g_(l); }
  const std::string& description() const { return description_; }

  /// C_l for l != 0; throws std::domain_error for l == 0.
  double c_l(long l) const;

  /// Same spectrum with every C_l multiplied by factor (> 0).
  PowerSpectrum scaled(double factor) const;

 private:
  PowerSpectrum(double alpha, Modulation g, std::string description);

  double alpha_;
  Modulation g_;
  std::string description_;
};

struct A1Report {
  double c1_hat = 0.0;
  double c2_hat = 0.0;
  bool ok = false;
  std::optional<std::size_t> offending_index;  // first l with g(l) <= 0 or non-finite
};

/// Scans g(1..l_max) and reports the empirical bounds. Besides positivity
/// and finiteness, ok requires the bounds to be stable under doubling of
/// the scan range: the extreme values over (l_max/2, l_max] may not leave
/// [0.75 * c1, c2 / 0.75] of the first half, which rejects modulations that
/// drift to 0 or infinity (g = 1/l, g = l).
A1Report validate_a1(const PowerSpectrum& spectrum, std::size_t l_max);

}  // namespace needlet
