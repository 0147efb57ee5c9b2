#pragma once

#include <cstddef>
#include <span>

#include "needlet/scale.hpp"
#include "needlet/spectrum.hpp"
#include "needlet/statistics.hpp"
#include "needlet/variance.hpp"

namespace needlet {

/// z-scores and two-sided N(0,1) p-values for one coefficient vector.
/// p_joint is the Sidak-corrected p-value of max(|z_S|, |z_U|):
/// 1 - (1 - p_min)^2.
///
/// When beta is normalized by its own sigma^_N, sum_k b_k^2 = N holds
/// exactly (Parseval), which removes the second Hermite component of U_N
/// and with it the sigma^2_{1U} part of the variance; z_U then divides by
/// sqrt(var_U2). var_z_U records the denominator actually used.
struct StudentizedReport {
  std::size_t N = 0;
  TestStatistics stats;
  VarianceSet variances;
  double var_z_U = 0.0;
  double z_S = 0.0;
  double z_U = 0.0;
  double p_S = 1.0;
  double p_U = 1.0;
  double p_joint = 1.0;
};

double two_sided_p(double z);

StudentizedReport studentize(const TestStatistics& stats, const VarianceSet& variances, std::size_t N,
                             bool self_normalized = false);

/// Exact mode: beta normalized by the theoretical sigma_N and compared with
/// the theoretical variances of `spectrum`. `theoretical` may be passed in
/// to avoid recomputing it per replication.
StudentizedReport test_exact(std::span<const double> beta, const NeedletScale& scale,
                             const VarianceSet& theoretical);
StudentizedReport test_exact(std::span<const double> beta, const NeedletScale& scale,
                             const PowerSpectrum& spectrum);

/// Studentized mode: everything is estimated from the coefficients, whose
/// periodogram |w_l|^2 a^2(4l/N) is recovered exactly from beta; beta is
/// normalized by sigma^_N (self-normalized).
StudentizedReport test_studentized(std::span<const double> beta, const NeedletScale& scale);

}  // namespace needlet
