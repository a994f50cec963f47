#ifndef QOT_QUADRATURE_HPP
#define QOT_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qot/errors.hpp"

namespace qot {

// Nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule of order n, computed by Newton iteration on P_n and
// cached process-wide. The returned reference stays valid for the process
// lifetime; concurrent callers are fine (the cache is mutex-guarded and
// entries are immutable once published).
inline const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto rule = std::make_unique<GaussLegendreRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on the recurrence-evaluated P_n.
    double x = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    // one clean evaluation of P_n' at the converged root for the weight
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->nodes[i] = -x;  // roots found from +1 side; store ascending
    rule->weights[i] = w;
    rule->nodes[n - 1 - i] = x;
    rule->weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule->nodes[n / 2] = 0.0;  // exact midpoint for odd orders
  const GaussLegendreRule& ref = *rule;
  cache.emplace(n, std::move(rule));
  return ref;
}

// Integrate f over [lo, hi] with an n-point Gauss-Legendre rule.
template <typename F>
double gl_integrate(F&& f, double lo, double hi, int n) {
  const GaussLegendreRule& r = gauss_legendre(n);
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += r.weights[i] * f(mid + half * r.nodes[i]);
  return acc * half;
}

// Chebyshev interpolation of f on [lo, hi] at n_samples first-kind nodes,
// returned as monomial coefficients in the raw variable (index = power).
// Coefficients below trunc_rel * max|c| are dropped from the tail before the
// basis conversion, which keeps the monomial form well-conditioned for the
// gently varying profiles this is used on (effective degree <= ~25).
template <typename F>
std::vector<double> chebyshev_fit_monomial(F&& f, double lo, double hi, int n_samples,
                                           double trunc_rel) {
  if (n_samples < 2) throw DomainError("chebyshev_fit_monomial: need >= 2 samples");
  const double pi = 3.14159265358979323846;
  double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);

  std::vector<double> y(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    y[i] = f(mid + half * std::cos(pi * (i + 0.5) / n_samples));
  }
  std::vector<double> c(n_samples, 0.0);
  double cmax = 0.0;
  // cos(j*theta_i) with theta_i = pi*(2i+1)/(2n): reduce the angle multiple
  // modulo 2*pi in exact integer arithmetic first, otherwise the rounding of
  // j*theta_i (arguments up to ~pi*n) floods the small high-order
  // coefficients and defeats the tail truncation below.
  const long long four_n = 4LL * n_samples;
  for (int j = 0; j < n_samples; ++j) {
    double acc = 0.0;
    for (int i = 0; i < n_samples; ++i) {
      long long rem = (static_cast<long long>(j) * (2LL * i + 1)) % four_n;
      double frac = static_cast<double>(rem) / static_cast<double>(2 * n_samples);
      acc += y[i] * std::cos(pi * frac);
    }
    c[j] = acc * 2.0 / n_samples;
    cmax = std::max(cmax, std::fabs(c[j]));
  }
  c[0] *= 0.5;

  int keep = 0;
  for (int j = 0; j < n_samples; ++j) {
    if (std::fabs(c[j]) > trunc_rel * cmax) keep = j;
  }

  // Chebyshev (in s) -> monomial (in s) via the T_{k+1} = 2sT_k - T_{k-1} recurrence.
  std::vector<double> poly_s(keep + 1, 0.0);
  std::vector<double> tk_prev = {1.0};        // T_0
  std::vector<double> tk = {0.0, 1.0};        // T_1
  poly_s[0] += c[0];
  if (keep >= 1) poly_s[1] += c[1];
  for (int k = 2; k <= keep; ++k) {
    std::vector<double> tk_next(k + 1, 0.0);
    for (std::size_t q = 0; q < tk.size(); ++q) tk_next[q + 1] += 2.0 * tk[q];
    for (std::size_t q = 0; q < tk_prev.size(); ++q) tk_next[q] -= tk_prev[q];
    for (int q = 0; q <= k; ++q) poly_s[q] += c[k] * tk_next[q];
    tk_prev = std::move(tk);
    tk = std::move(tk_next);
  }

  // Substitute s = (t - mid)/half, i.e. evaluate the polynomial at the affine
  // argument by Horner over polynomial coefficients in t.
  std::vector<double> poly_t = {poly_s.empty() ? 0.0 : poly_s.back()};
  for (int k = static_cast<int>(poly_s.size()) - 2; k >= 0; --k) {
    // poly_t = poly_t * (t - mid)/half + poly_s[k]
    std::vector<double> next(poly_t.size() + 1, 0.0);
    for (std::size_t q = 0; q < poly_t.size(); ++q) {
      next[q + 1] += poly_t[q] / half;
      next[q] -= poly_t[q] * mid / half;
    }
    next[0] += poly_s[k];
    poly_t = std::move(next);
  }
  return poly_t;
}

inline double poly_eval(const std::vector<double>& coeffs, double t) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

}  // namespace qot

#endif  // QOT_QUADRATURE_HPP
