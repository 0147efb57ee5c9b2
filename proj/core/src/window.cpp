#include "needlet/window.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "needlet/error.hpp"

namespace needlet {

namespace {

double bump_profile(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace

Window::Window() : profile_(bump_profile) {}

Window::Window(Profile transition_profile) : profile_(std::move(transition_profile)) {}

double Window::phi(double xi) const {
  const double x = std::abs(xi);
  if (x <= 0.5) return 1.0;
  if (x >= 1.0) return 0.0;
  const double up = profile_(2.0 - 2.0 * x);
  const double down = profile_(2.0 * x - 1.0);
  return up / (up + down);
}

double Window::a2(double xi) const {
  const double x = std::abs(xi);
  if (x <= 0.5 || x >= 2.0) return 0.0;
  const double d = phi(0.5 * x) - phi(x);
  if (d < -kNegativeTolerance) {
    std::ostringstream msg;
    msg << "window profile inconsistent: phi(xi/2) - phi(xi) = " << d << " at xi = " << xi;
    throw ConsistencyError(msg.str());
  }
  return d > 0.0 ? d : 0.0;
}

double Window::a(double xi) const { return std::sqrt(a2(xi)); }

const Window& default_window() {
  static const Window w;
  return w;
}

double phi(double xi) { return default_window().phi(xi); }
double window_a(double xi) { return default_window().a(xi); }
double window_a2(double xi) { return default_window().a2(xi); }

}  // namespace needlet
