#pragma once

#include <span>
#include <vector>

namespace needlet::detail {

enum class TupleWeighting {
  Plain,         // every tuple weighted 1
  InverseDelta,  // tuple weighted 1 / delta(|l_1|, ..., |l_p|)
};

/// Residue targets {t = jN : |t| <= order * N/2}: the only Fejer arguments
/// (l_1 + ... + l_p) tau that survive.
std::vector<long> residue_targets(int order, long N);

/// sum over signed tuples (l_1..l_p), 0 < |l_i| <= L, with l_1 + ... + l_p in
/// `targets`, of weighting(tuple) * prod_i weights[|l_i|]. weights[0] is
/// ignored (treated as 0) and L = weights.size() - 1.
///
/// Plain weighting is a p-fold self-convolution. The 1/delta weighting is
/// expanded by Moebius inversion on the lattice of |l|-equality partitions:
/// each partition sigma contributes g(sigma) * S(sigma), where S(sigma)
/// merges each block into one variable (|l| shared, signs free) and is again
/// a convolution, and g(sigma) = prod_blocks h(|B|) with h the coefficients
/// of log(sum_k x^k / (k!)^2).
double residue_sum(std::span<const double> weights, int order, std::span<const long> targets,
                   TupleWeighting weighting);

/// Orders 2, 3 and 4 at their residue targets for period N, sharing the
/// convolution workspace.
struct VarianceSums {
  double order2 = 0.0;
  double order3 = 0.0;
  double order4 = 0.0;
};

VarianceSums variance_residue_sums(std::span<const double> weights, long N, TupleWeighting weighting);

}  // namespace needlet::detail
