#pragma once

#include <functional>

namespace needlet {

/// Smooth Littlewood-Paley window.
///
/// phi is C-infinity, equal to 1 on |xi| <= 1/2, 0 on |xi| >= 1, and built
/// from a transition profile s via
///
///   phi(xi) = s(2 - 2|xi|) / (s(2 - 2|xi|) + s(2|xi| - 1)),
///
/// so that a^2(xi) = phi(xi/2) - phi(xi) telescopes into a dyadic partition
/// of unity: sum_j a^2(xi / 2^j) = 1 for |xi| >= 1. The default profile is
/// s(t) = exp(-1/t) for t > 0 and 0 otherwise.
class Window {
 public:
  using Profile = std::function<double(double)>;

  Window();
  explicit Window(Profile transition_profile);

  double phi(double xi) const;

  /// a^2(xi) = phi(xi/2) - phi(xi), clamped at 0 after the consistency
  /// check. Throws ConsistencyError when the difference is below
  /// -kNegativeTolerance (a profile that is not monotone).
  double a2(double xi) const;

  /// a(xi) = sqrt(a^2(xi)); even, supported in 1/2 <= |xi| <= 2.
  double a(double xi) const;

  static constexpr double kNegativeTolerance = 1e-14;

 private:
  Profile profile_;
};

/// Process-wide default window (exp(-1/t) profile).
const Window& default_window();

double phi(double xi);
double window_a(double xi);
double window_a2(double xi);

}  // namespace needlet
