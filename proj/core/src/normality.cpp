#include "needlet/normality.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace needlet {

Histogram make_histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
  if (bins < 2) throw std::invalid_argument("histogram needs at least 2 bins");
  if (!(hi > lo)) throw std::invalid_argument("histogram range is empty");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(bins, 0);
  const double width = h.width();
  for (double v : values) {
    if (v < lo) {
      ++h.clipped_low;
      ++h.counts.front();
    } else if (v >= hi) {
      ++h.clipped_high;
      ++h.counts.back();
    } else {
      auto i = static_cast<std::size_t>((v - lo) / width);
      h.counts[std::min(i, bins - 1)]++;
    }
  }
  return h;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double ks_statistic(std::span<const double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("KS statistic of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_pvalue(double d, std::size_t n) {
  if (n == 0) throw std::invalid_argument("KS p-value needs n > 0");
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double correlation(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("correlation needs paired samples");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

NormalityDiagnostics normality_diagnostics(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("normality diagnostics need at least 2 values");
  NormalityDiagnostics d;
  d.n = values.size();
  const double n = static_cast<double>(d.n);
  for (double v : values) d.mean += v;
  d.mean /= n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    const double c = v - d.mean;
    m2 += c * c;
    m3 += c * c * c;
    m4 += c * c * c * c;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  d.variance = m2 * n / (n - 1.0);
  d.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
  d.excess_kurtosis = m2 > 0.0 ? m4 / (m2 * m2) - 3.0 : 0.0;
  d.ks_statistic = ks_statistic(values, normal_cdf);
  d.ks_p = ks_pvalue(d.ks_statistic, d.n);
  d.histogram = make_histogram(values);
  return d;
}

void emit_histogram(std::span<const double> values, std::size_t bins, const std::filesystem::path& path) {
  if (values.empty()) throw std::invalid_argument("cannot write a histogram of an empty sample");
  const auto h = make_histogram(values, bins);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const double width = h.width();
  const double n = static_cast<double>(values.size());
  out << "bin_left,bin_right,count,normal_density\n";
  out.precision(17);
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double left = h.lo + width * static_cast<double>(i);
    const double mid = left + 0.5 * width;
    const double expected = n * width * std::exp(-0.5 * mid * mid) / std::sqrt(2.0 * std::numbers::pi);
    out << left << ',' << left + width << ',' << h.counts[i] << ',' << expected << '\n';
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace needlet
