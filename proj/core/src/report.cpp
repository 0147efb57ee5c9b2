#include "needlet/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "needlet/coeffs.hpp"

namespace needlet {

double two_sided_p(double z) {
  if (!std::isfinite(z)) return 0.0;
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

StudentizedReport studentize(const TestStatistics& stats, const VarianceSet& variances, std::size_t N,
                             bool self_normalized) {
  if (!(variances.var_S > 0.0) || !(variances.var_U2 > 0.0) || !(variances.var_U > 0.0)) {
    throw std::invalid_argument("variances must be positive to studentize");
  }
  StudentizedReport r;
  r.N = N;
  r.stats = stats;
  r.variances = variances;
  r.z_S = stats.skewness / std::sqrt(variances.var_S);
  r.var_z_U = self_normalized ? variances.var_U2 : variances.var_U;
  r.z_U = stats.kurtosis / std::sqrt(r.var_z_U);
  r.p_S = two_sided_p(r.z_S);
  r.p_U = two_sided_p(r.z_U);
  const double p_min = std::min(r.p_S, r.p_U);
  r.p_joint = 1.0 - (1.0 - p_min) * (1.0 - p_min);
  return r;
}

StudentizedReport test_exact(std::span<const double> beta, const NeedletScale& scale,
                             const VarianceSet& theoretical) {
  if (beta.size() != scale.N) throw std::invalid_argument("expected N needlet coefficients");
  return studentize(compute_statistics(beta, theoretical.sigma2), theoretical, scale.N);
}

StudentizedReport test_exact(std::span<const double> beta, const NeedletScale& scale,
                             const PowerSpectrum& spectrum) {
  return test_exact(beta, scale, var_theoretical(spectrum, scale));
}

StudentizedReport test_studentized(std::span<const double> beta, const NeedletScale& scale) {
  const auto u = periodogram_from_beta(beta, scale);
  const auto estimated = var_estimated(u, scale);
  return studentize(compute_statistics(beta, estimated.sigma2), estimated, scale.N, true);
}

}  // namespace needlet
