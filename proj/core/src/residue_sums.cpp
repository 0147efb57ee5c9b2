#include "residue_sums.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "fft.hpp"

namespace needlet::detail {

namespace {

/// Values on the integer range [lo, lo + values.size()).
struct OffsetArray {
  long lo = 0;
  std::vector<double> values;

  double at(long x) const {
    const long i = x - lo;
    if (i < 0 || i >= static_cast<long>(values.size())) return 0.0;
    return values[static_cast<std::size_t>(i)];
  }
};

OffsetArray convolve(const OffsetArray& a, const OffsetArray& b) {
  return {a.lo + b.lo, fft::convolve(a.values, b.values)};
}

/// sum_x a(x) b(t - x)
double dot_at(const OffsetArray& a, const OffsetArray& b, long t) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] == 0.0) continue;
    const long x = a.lo + static_cast<long>(i);
    sum += a.values[i] * b.at(t - x);
  }
  return sum;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// h(n) = n! [x^n] log(sum_{k>=0} x^k / (k!)^2), n = 1..max_order.
std::vector<double> moebius_block_weights(int max_order) {
  std::vector<double> f(static_cast<std::size_t>(max_order) + 1, 0.0);
  for (int k = 1; k <= max_order; ++k) f[k] = 1.0 / (factorial(k) * factorial(k));
  std::vector<double> log_coeff(f.size(), 0.0);
  for (int n = 1; n <= max_order; ++n) {
    double s = 0.0;
    for (int k = 1; k < n; ++k) s += k * log_coeff[k] * f[n - k];
    log_coeff[n] = f[n] - s / n;
  }
  std::vector<double> h(f.size(), 0.0);
  for (int n = 1; n <= max_order; ++n) h[n] = factorial(n) * log_coeff[n];
  return h;
}

/// Integer partitions of n, parts in ascending order.
void integer_partitions(int remaining, int min_part, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    current.push_back(part);
    integer_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

/// Number of set partitions of {1..n} with the given block sizes.
double set_partition_count(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  double count = factorial(n);
  std::map<int, int> multiplicity;
  for (int s : sizes) {
    count /= factorial(s);
    ++multiplicity[s];
  }
  for (const auto& [size, mult] : multiplicity) count /= factorial(mult);
  return count;
}

class ResidueSummer {
 public:
  explicit ResidueSummer(std::span<const double> weights) : weights_(weights.begin(), weights.end()) {
    if (weights_.empty()) throw std::invalid_argument("empty weight vector");
    weights_[0] = 0.0;
    bandwidth_ = static_cast<long>(weights_.size()) - 1;
  }

  double sum(int order, std::span<const long> targets, TupleWeighting weighting) {
    if (order < 1) throw std::invalid_argument("tuple order must be >= 1");
    if (weighting == TupleWeighting::Plain) {
      return block_sum(std::vector<int>(static_cast<std::size_t>(order), 1), targets);
    }
    const auto h = moebius_block_weights(order);
    std::vector<std::vector<int>> partitions;
    std::vector<int> scratch;
    integer_partitions(order, 1, scratch, partitions);
    double total = 0.0;
    for (const auto& sizes : partitions) {
      double g = set_partition_count(sizes);
      for (int s : sizes) g *= h[static_cast<std::size_t>(s)];
      total += g * block_sum(sizes, targets);
    }
    return total;
  }

 private:
  /// W_b(x) = sum_{m >= 1} weights[m]^b * #{sign patterns s in {+-1}^b : m * sum(s) = x}.
  const OffsetArray& block(int b) {
    const std::vector<int> key{b};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    OffsetArray arr;
    arr.lo = -static_cast<long>(b) * bandwidth_;
    arr.values.assign(static_cast<std::size_t>(2 * b * bandwidth_ + 1), 0.0);
    for (long m = 1; m <= bandwidth_; ++m) {
      const double wm = std::pow(weights_[static_cast<std::size_t>(m)], b);
      if (wm == 0.0) continue;
      for (int negatives = 0; negatives <= b; ++negatives) {
        const long x = static_cast<long>(b - 2 * negatives) * m;
        arr.values[static_cast<std::size_t>(x - arr.lo)] += binomial(b, negatives) * wm;
      }
    }
    return cache_.emplace(key, std::move(arr)).first->second;
  }

  /// Convolution of the blocks with the given (ascending) sizes.
  const OffsetArray& product(const std::vector<int>& sizes) {
    if (sizes.size() == 1) return block(sizes.front());
    if (auto it = cache_.find(sizes); it != cache_.end()) return it->second;
    const std::vector<int> head(sizes.begin(), sizes.end() - 1);
    OffsetArray arr = convolve(product(head), block(sizes.back()));
    return cache_.emplace(sizes, std::move(arr)).first->second;
  }

  /// S(sizes) = sum_t (W_{b_1} * ... * W_{b_k})(t).
  double block_sum(const std::vector<int>& sizes, std::span<const long> targets) {
    double total = 0.0;
    if (sizes.size() == 1) {
      const auto& a = block(sizes.front());
      for (long t : targets) total += a.at(t);
      return total;
    }
    const std::size_t split = (sizes.size() + 1) / 2;
    const std::vector<int> left_sizes(sizes.begin(), sizes.begin() + static_cast<long>(split));
    const std::vector<int> right_sizes(sizes.begin() + static_cast<long>(split), sizes.end());
    const auto& left = product(left_sizes);
    const auto& right = product(right_sizes);
    for (long t : targets) total += dot_at(left, right, t);
    return total;
  }

  std::vector<double> weights_;
  long bandwidth_ = 0;
  std::map<std::vector<int>, OffsetArray> cache_;
};

}  // namespace

std::vector<long> residue_targets(int order, long N) {
  if (order < 1 || N < 1) throw std::invalid_argument("invalid residue target request");
  std::vector<long> targets;
  const long reach = static_cast<long>(order) * (N / 2);
  for (long t = -(reach / N) * N; t <= reach; t += N) targets.push_back(t);
  return targets;
}

double residue_sum(std::span<const double> weights, int order, std::span<const long> targets,
                   TupleWeighting weighting) {
  ResidueSummer summer(weights);
  return summer.sum(order, targets, weighting);
}

VarianceSums variance_residue_sums(std::span<const double> weights, long N, TupleWeighting weighting) {
  ResidueSummer summer(weights);
  VarianceSums out;
  out.order2 = summer.sum(2, residue_targets(2, N), weighting);
  out.order3 = summer.sum(3, residue_targets(3, N), weighting);
  out.order4 = summer.sum(4, residue_targets(4, N), weighting);
  return out;
}

}  // namespace needlet::detail
