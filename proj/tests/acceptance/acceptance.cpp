// One PASS/FAIL line per acceptance criterion. Seeds are fixed up front;
// runtime budgets are part of each criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../support/oracles.hpp"
#include "cli.hpp"
#include "needlet/coeffs.hpp"
#include "needlet/field.hpp"
#include "needlet/frame_check.hpp"
#include "needlet/harness.hpp"
#include "needlet/normality.hpp"
#include "needlet/quadrature.hpp"
#include "needlet/variance.hpp"
#include "needlet/window.hpp"

using namespace needlet;
namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::size_t workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt < budget_s;
  const bool pass = v.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s: %s; %.2f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", id, name, v.detail.c_str(), dt,
              budget_s, in_time ? "" : ", exceeded");
  std::fflush(stdout);
}

// 1. equal-weight rule on m+1 nodes integrates degree-m real trigonometric
// polynomials exactly; the integral is the constant term.
Verdict quadrature_exactness() {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (std::size_t m : {1u, 7u, 63u}) {
    const auto rule = quadrature(m);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> a(m + 1), b(m + 1);
      for (std::size_t l = 0; l <= m; ++l) {
        a[l] = g(rng);
        b[l] = g(rng);
      }
      auto f = [&](double x) {
        double s = a[0];
        for (std::size_t l = 1; l <= m; ++l) s += a[l] * std::cos(l * x) + b[l] * std::sin(l * x);
        return s;
      };
      worst = std::max(worst, std::abs(integrate(rule, f) - a[0]));
    }
  }
  return {worst <= 1e-12, fmt("max error %.2e (tol 1e-12)", worst)};
}

// 2. sum of squared needlet coefficients reproduces ||f||^2
Verdict tight_frame() {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  double worst = 0.0;
  for (int J : {3, 5, 7}) {
    const long deg = 1L << J;
    for (int t = 0; t < 50; ++t) {
      TrigPolynomial f(static_cast<std::size_t>(deg));
      for (long l = -deg; l <= deg; ++l) f.set_coeff(l, {g(rng), g(rng)});
      worst = std::max(worst, tight_frame_check(f, J) / f.energy());
    }
  }
  return {worst <= 1e-10, fmt("max relative discrepancy %.2e (tol 1e-10)", worst)};
}

// 3. sum_j a^2(xi / 2^j) = 1 for |xi| >= 1
Verdict partition_of_unity() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> logxi(0.0, std::log(1e6));
  std::bernoulli_distribution sign;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double xi = (sign(rng) ? 1.0 : -1.0) * std::exp(logxi(rng));
    double s = 0.0;
    for (int j = 0; j < 64; ++j) s += window_a2(std::ldexp(xi, -j));
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return {worst <= 1e-12, fmt("max |sum - 1| %.2e (tol 1e-12)", worst)};
}

// 4. the needlet coefficients sum to zero, so the sample mean is degenerate
Verdict degenerate_mean() {
  ExperimentConfig c;
  c.j = 8;
  c.replications = 100;
  c.seed = 4;
  c.workers = workers();
  const auto r = run_mc(c);
  double worst = 0.0;
  for (const auto& rec : r.records) worst = std::max(worst, std::abs(rec.M_N));
  return {worst <= 1e-10, fmt("max |M_N| %.2e over 100 replications at N = 1024 (tol 1e-10)", worst)};
}

// 5. residue-class sums vs literal Fejer-kernel sums vs diagram-formula sums
Verdict oracle_triangle() {
  double worst = 0.0;
  for (const auto& s : {PowerSpectrum::power_law(4.0), PowerSpectrum::cosine(2.5, 2.0, 1.0, 1.0)}) {
    for (int j : {1, 2, 3}) {
      const auto scale = NeedletScale::from_level(j);
      const auto v = weighted_spectrum(s, scale);
      const auto fast = var_theoretical(s, scale);
      const auto lit = oracle::fejer_sums(v, scale.N, false);
      const auto dia = oracle::diagram(v, scale.N);
      auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
      for (double e : {rel(fast.var_S, lit.var_S), rel(fast.var_U1, lit.var_U1), rel(fast.var_U2, lit.var_U2),
                       rel(fast.var_S, dia.var_S), rel(fast.var_U1, dia.var_U1), rel(fast.var_U2, dia.var_U2),
                       rel(lit.var_S, dia.var_S), rel(lit.var_U2, dia.var_U2)}) {
        worst = std::max(worst, e);
      }
    }
  }
  return {worst <= 1e-9, fmt("max relative disagreement %.2e at N = 8, 16, 32, two spectra (tol 1e-9)", worst)};
}

// 6. |Corr(dk)| (1 + [dk])^3 bounded by one constant over all lags
Verdict correlation_decay_bound() {
  const auto d = correlation_decay(PowerSpectrum::power_law(4.0), NeedletScale::from_level(6), 3);
  const bool ok = std::isfinite(d.max_weighted) && d.max_weighted > 0.0;
  return {ok, fmt("sup_dk |Corr| (1 + [dk])^3 = %.4f at lag %ld, N = 256", d.max_weighted, d.argmax_lag)};
}

struct MomentCheck {
  double var, se, target;
  bool ok() const { return std::abs(var - target) <= 3.0 * se; }
};

MomentCheck sample_variance_vs(const std::vector<double>& x, double target) {
  const double n = static_cast<double>(x.size());
  double mean = 0.0;
  for (double v : x) mean += v / n;
  double m2 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    m2 += d * d / n;
    m4 += d * d * d * d / n;
  }
  return {m2 * n / (n - 1.0), std::sqrt((m4 - m2 * m2) / n), target};
}

// 7. Monte Carlo variance of S_N, U_N against the asymptotic formulas
Verdict variance_vs_mc() {
  ExperimentConfig c;
  c.j = 6;
  c.replications = 4000;
  c.seed = 7;
  c.workers = workers();
  const auto r = run_mc(c);
  std::vector<double> s, u;
  for (const auto& rec : r.records) {
    s.push_back(rec.S_N);
    u.push_back(rec.U_N);
  }
  const auto cs = sample_variance_vs(s, r.theoretical.var_S);
  const auto cu = sample_variance_vs(u, r.theoretical.var_U);
  return {cs.ok() && cu.ok(), fmt("var S_N %.4f vs %.4f (se %.4f); var U_N %.3f vs %.3f (se %.3f)", cs.var,
                                  cs.target, cs.se, cu.var, cu.target, cu.se)};
}

// 8. standardized statistics look N(0, 1) in both normalization modes
Verdict gaussianity() {
  bool ok = true;
  std::string detail;
  for (auto mode : {McMode::Exact, McMode::Studentized}) {
    ExperimentConfig c;
    c.j = 10;
    c.replications = 1600;
    c.seed = 7;
    c.mode = mode;
    c.workers = workers();
    const auto r = run_mc(c);
    const double corr_tol = 2.0 * 3.0 / std::sqrt(1600.0);
    for (const auto* d : {&r.z_S, &r.z_U}) {
      ok = ok && std::abs(d->mean) < 0.1 && d->variance >= 0.85 && d->variance <= 1.15 && d->ks_p > 0.01;
    }
    ok = ok && std::abs(r.corr_zs_zu) < corr_tol;
    detail += fmt("%s: z_S mean %+.3f var %.3f skew %+.3f KS p %.3f; z_U mean %+.3f var %.3f skew %+.3f KS p %.3f; "
                  "corr %+.3f. ",
                  mode == McMode::Exact ? "exact" : "studentized", r.z_S.mean, r.z_S.variance, r.z_S.skewness,
                  r.z_S.ks_p, r.z_U.mean, r.z_U.variance, r.z_U.skewness, r.z_U.ks_p, r.corr_zs_zu);
  }
  detail.resize(detail.size() - 2);
  return {ok, detail};
}

double median(std::vector<double> v) {
  const auto mid = v.begin() + static_cast<long>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  if (v.size() % 2) return *mid;
  return 0.5 * (*mid + *std::max_element(v.begin(), mid));
}

// 9. plug-in sigma_N^2 and var_S converge to their targets
Verdict estimator_consistency() {
  ExperimentConfig c;
  c.j = 10;
  c.replications = 500;
  c.seed = 9;
  c.mode = McMode::Studentized;
  c.workers = workers();
  const auto r = run_mc(c);
  std::vector<double> ds, dv;
  for (const auto& rec : r.records) {
    ds.push_back(std::abs(rec.sigma2 / r.theoretical.sigma2 - 1.0));
    dv.push_back(std::abs(rec.var_S / r.theoretical.var_S - 1.0));
  }
  const double ms = median(ds), mv = median(dv);
  return {ms < 0.05 && mv < 0.15,
          fmt("median |sigma^2 ratio - 1| %.4f (< 0.05), median |var_S ratio - 1| %.4f (< 0.15)", ms, mv)};
}

// 10. w~_l = sum_k w_{l+kM} exactly, and grid-coefficient error decays like (M/N)^-4
Verdict aliasing() {
  const std::size_t M = 64;
  std::vector<std::complex<double>> w(70, 0.0);
  w[5] = {1.0, 0.5};
  w[69] = {0.3, -0.2};  // 5 + M
  const auto samples = oracle::grid_direct(w, M);
  const auto emp = w_discrete(GridSample{M, samples}, 32);
  double id_err = 0.0;
  for (long l = 0; l <= 32; ++l) {
    std::complex<double> folded = 0.0;
    for (long q = 1; q < static_cast<long>(w.size()); ++q) {
      if ((q - l) % static_cast<long>(M) == 0) folded += w[q];
      if ((q + l) % static_cast<long>(M) == 0) folded += std::conj(w[q]);
    }
    id_err = std::max(id_err, std::abs(emp.w_tilde[l] - folded));
  }
  // beta~ equals beta of the folded spectrum
  const auto scale = NeedletScale::from_level(3);  // N = 32, support 4 < l < 16
  std::vector<std::complex<double>> folded_w(17, 0.0);
  folded_w[5] = w[5] + w[69];
  const auto beta_fold = beta_from_spectrum(folded_w, scale);
  const auto beta_grid = beta_discrete(GridSample{M, samples}, scale).beta;
  for (std::size_t k = 0; k < scale.N; ++k) id_err = std::max(id_err, std::abs(beta_fold[k] - beta_grid[k]));

  ExperimentConfig c;
  c.j = 6;
  c.replications = 20;
  c.seed = 10;
  c.workers = workers();
  const auto r = run_aliasing(c, {512, 1024, 2048, 4096, 8192});
  const double e = r.fitted_exponent;
  return {id_err <= 1e-12 && e >= -5.0 && e <= -3.0,
          fmt("two-mode identity max error %.2e (tol 1e-12); fitted exponent %.3f at N = 256 (in [-5, -3])", id_err,
              e)};
}

// 11. worker count does not change a single byte of zscores.csv
Verdict determinism() {
  const auto root = fs::temp_directory_path() / "needlet_acceptance_determinism";
  fs::remove_all(root);
  std::ostringstream sink;
  bool same = true;
  std::string detail;
  for (const char* mode : {"exact", "studentized"}) {
    std::string bytes[2];
    int i = 0;
    for (const char* w : {"1", "8"}) {
      const auto dir = root / (std::string(mode) + "_" + w);
      const int code = cli::run({"mc", "--alpha", "4", "--j", "8", "--reps", "200", "--seed", "11", "--mode", mode,
                                 "--workers", w, "--out", dir.string()},
                                sink, sink);
      if (code != 0) return {false, "mc exited with " + std::to_string(code)};
      std::ifstream in(dir / "zscores.csv", std::ios::binary);
      bytes[i++] = std::string(std::istreambuf_iterator<char>(in), {});
    }
    same = same && !bytes[0].empty() && bytes[0] == bytes[1];
    detail += fmt("%s %zu bytes %s; ", mode, bytes[0].size(), bytes[0] == bytes[1] ? "identical" : "DIFFER");
  }
  fs::remove_all(root);
  detail.resize(detail.size() - 2);
  return {same, detail + " (1 vs 8 workers, seed 11)"};
}

}  // namespace

int main() {
  criterion(1, "quadrature exactness", 1.0, quadrature_exactness);
  criterion(2, "tight frame", 5.0, tight_frame);
  criterion(3, "partition of unity", 1.0, partition_of_unity);
  criterion(4, "degenerate mean", 5.0, degenerate_mean);
  criterion(5, "variance oracle triangle", 10.0, oracle_triangle);
  criterion(6, "correlation decay", 1.0, correlation_decay_bound);
  criterion(7, "variance formulas vs Monte Carlo", 60.0, variance_vs_mc);
  criterion(8, "Gaussianity of z_S, z_U", 600.0, gaussianity);
  criterion(9, "estimator consistency", 120.0, estimator_consistency);
  criterion(10, "aliasing identity and rate", 60.0, aliasing);
  criterion(11, "determinism across workers", 600.0, determinism);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
