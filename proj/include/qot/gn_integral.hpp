#ifndef QOT_GN_INTEGRAL_HPP
#define QOT_GN_INTEGRAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/fiber.hpp"
#include "qot/nli_types.hpp"
#include "qot/quadrature.hpp"
#include "qot/raman.hpp"
#include "qot/units.hpp"

namespace qot {

enum class GridStrategy { uniform, hyperbolic_refined };

// Discretization knobs for the integral model.
//   zeta_points   - sample budget for the per-span distance integral
//   f_grid_points - per-axis base node count for the (f1, f2) integration
//   grid_strategy - hyperbolic_refined concentrates nodes on the
//                   phase-matching ridge; uniform uses plain tensor rules
//   rel_tol       - adaptive refinement target (grids double until two
//                   consecutive levels agree to rel_tol)
struct QuadratureSpec {
  int zeta_points = 512;
  int f_grid_points = 128;
  GridStrategy grid_strategy = GridStrategy::hyperbolic_refined;
  double rel_tol = 1e-3;

  void validate() const {
    if (zeta_points < 16) throw DomainError("QuadratureSpec: zeta_points must be >= 16");
    if (f_grid_points < 32) throw DomainError("QuadratureSpec: f_grid_points must be >= 32");
    if (!(rel_tol > 0.0) || !(rel_tol < 0.1)) {
      throw DomainError("QuadratureSpec: rel_tol must be in (0, 0.1)");
    }
  }
};

namespace detail {

/* Distance integral of the ISRS-tilted span profile against exp(j*w*zeta).
 *
 * The profile at combination frequency m is
 *   rho(zeta, m) = exp(-alpha*zeta) * exp(-x(zeta)*m) / Nocc(x(zeta)),
 * with x(zeta) = x_cap*(1 - exp(-alpha*zeta)) and Nocc the occupancy-aware
 * spectrum normalizer. Substituting t = exp(-alpha*zeta) makes x exactly
 * affine in t, so with D(t) = 1/Nocc(x_cap*(1-t)) fitted by a short
 * polynomial sum_q d_q t^q, every term of
 *   integral of t * D(t) * exp(-x_cap*m*(1-t)) * exp(j*w*zeta) dzeta
 * reduces to the analytic primitive
 *   E_p(w) = (1 - exp(-(p+1)*alpha*L) * exp(j*w*L)) / ((p+1)*alpha - j*w)
 * after expanding exp(x_cap*m*t) as an entire series. A fixed-node rule in
 * zeta cannot do this job: far C+L channel pairs accumulate ~3e4 radians of
 * phase over a span, far beyond any practical node budget, while E_p is exact
 * in w. The Chebyshev fit residual is verified at construction and the fit
 * reported as a QuadratureError if the zeta_points budget cannot express the
 * profile.
 */
struct LinkKernel {
  double alpha = 0.0;   // profile decay rate, 1/m
  double length = 0.0;  // span length, m
  double x_cap = 0.0;   // tilt saturation P_tot*Cr/alpha, 1/Hz
  std::vector<double> poly_t;   // monomial coefficients of D(t)
  std::vector<double> decay_p;  // exp(-(p+1)*alpha*L) for all p this kernel can need
};

inline constexpr int kKernelSeriesMax = 30;

inline LinkKernel make_link_kernel(const ChannelPlan& plan, const FiberParams& fiber,
                                   const QuadratureSpec& quad) {
  fiber.validate();
  quad.validate();
  LinkKernel k;
  k.alpha = fiber.alpha;
  k.length = fiber.length;
  if (fiber.cr == 0.0) {
    k.x_cap = 0.0;
    k.poly_t = {1.0};  // no tilt: D(t) is identically 1 and E_0 is exact
  } else {
    k.x_cap = plan.total_power() * fiber.cr / fiber.alpha;
    double t_min = std::exp(-fiber.alpha * fiber.length);
    auto d_of_t = [&](double t) {
      return 1.0 / occupancy_spectrum_normalizer(plan, k.x_cap * (1.0 - t));
    };
    int n_fit = std::min(quad.zeta_points, 512);
    k.poly_t = chebyshev_fit_monomial(d_of_t, t_min, 1.0, n_fit, 1e-15);
    if (k.poly_t.size() > 41) k.poly_t.resize(41);
    // The expansion only ever interpolates; verify it on a shifted grid.
    for (int i = 0; i <= 100; ++i) {
      double t = t_min + (1.0 - t_min) * i / 100.0;
      double want = d_of_t(t);
      if (std::fabs(poly_eval(k.poly_t, t) - want) > 1e-9 * std::fabs(want)) {
        throw QuadratureError(
            "link kernel: ISRS profile fit did not converge within the zeta_points budget");
      }
    }
  }
  int p_max = static_cast<int>(k.poly_t.size()) + kKernelSeriesMax + 1;
  k.decay_p.resize(p_max + 1);
  double e1 = std::exp(-k.alpha * k.length);
  double cur = 1.0;
  for (int p = 0; p <= p_max; ++p) {
    cur *= e1;
    k.decay_p[p] = cur;
  }
  return k;
}

// |LK(w, m)|^2: squared modulus of the distance integral at phase rate w
// (rad/m) and combination frequency m (Hz, relative to band center).
inline double lk_squared(const LinkKernel& k, double w, double m) {
  double y = k.x_cap * m;

  // exp(y*t) series terms y^r/r!, truncated once they stop mattering
  double series[kKernelSeriesMax + 1];
  int r_max = 0;
  series[0] = 1.0;
  double mag = 1.0;
  for (int r = 1; r <= kKernelSeriesMax; ++r) {
    series[r] = series[r - 1] * y / r;
    mag = std::max(mag, std::fabs(series[r]));
    r_max = r;
    if (std::fabs(series[r]) < 1e-17 * mag) break;
  }

  std::complex<double> ejwl(std::cos(w * k.length), std::sin(w * k.length));
  std::complex<double> sum(0.0, 0.0);
  int d_max = static_cast<int>(k.poly_t.size()) - 1;
  for (int p = 0; p <= d_max + r_max; ++p) {
    double beta = 0.0;
    int q_lo = std::max(0, p - r_max);
    int q_hi = std::min(d_max, p);
    for (int q = q_lo; q <= q_hi; ++q) beta += k.poly_t[q] * series[p - q];
    if (beta == 0.0) continue;
    std::complex<double> ep =
        (1.0 - k.decay_p[p] * ejwl) / std::complex<double>((p + 1) * k.alpha, -w);
    sum += beta * ep;
  }
  double amp_scale = std::exp(-y);
  return std::norm(amp_scale * sum);
}

// Phase rate of the four-wave term at pump pair (f1, f2) beating against f_i:
// w = -4*pi^2*(f1 - f_i)*(f2 - f_i)*(beta2 + pi*beta3*(f1 + f2)), rad/m.
inline double phase_rate(double f1, double f2, double f_i, const FiberParams& fiber) {
  return -4.0 * kPi * kPi * (f1 - f_i) * (f2 - f_i) *
         (fiber.beta2 + kPi * fiber.beta3 * (f1 + f2));
}

// One axis of the frequency grid: plain Gauss-Legendre nodes on [lo, hi], or
// the same rule pushed through u = s*sinh(tau), which concentrates nodes in
// the |u| <~ s region where the phase-matching ridge lives.
struct AxisGrid {
  std::vector<double> u;
  std::vector<double> w;
};

inline AxisGrid make_axis(double lo, double hi, double ridge_scale, int n,
                          GridStrategy strategy) {
  AxisGrid g;
  g.u.resize(n);
  g.w.resize(n);
  const GaussLegendreRule& r = gauss_legendre(n);
  if (strategy == GridStrategy::uniform) {
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    for (int i = 0; i < n; ++i) {
      g.u[i] = mid + half * r.nodes[i];
      g.w[i] = half * r.weights[i];
    }
  } else {
    double tlo = std::asinh(lo / ridge_scale), thi = std::asinh(hi / ridge_scale);
    double mid = 0.5 * (tlo + thi), half = 0.5 * (thi - tlo);
    for (int i = 0; i < n; ++i) {
      double tau = mid + half * r.nodes[i];
      g.u[i] = ridge_scale * std::sinh(tau);
      g.w[i] = half * r.weights[i] * ridge_scale * std::cosh(tau);
    }
  }
  return g;
}

// Adaptive driver shared by the SPM/XPM integrals: evaluate at the base
// per-axis resolution and at half of it; if they disagree beyond rel_tol,
// keep doubling until two consecutive levels agree or the budget runs out.
template <typename EvalFn>
double refine_to_tolerance(EvalFn&& eval, const QuadratureSpec& quad, const char* what) {
  int n = quad.f_grid_points;
  double coarse = eval(std::max(16, n / 2));
  double fine = eval(n);
  while (std::fabs(fine - coarse) > quad.rel_tol * std::fabs(fine)) {
    if (n >= 16 * quad.f_grid_points) {
      throw QuadratureError(std::string(what) +
                            ": frequency grid did not converge within the node budget");
    }
    n *= 2;
    coarse = fine;
    fine = eval(n);
  }
  return fine;
}

// XPM contribution of interferer k onto channel i, both taken from the plan.
// u offsets the COI pump, v the interferer pump; the third tone lands at
// f_k + u + v and the rectangle selector keeps it inside the interferer band.
inline double eta_xpm_pair(const LinkKernel& kern, const ChannelPlan& plan,
                           const FiberParams& fiber, const QuadratureSpec& quad,
                           std::size_t i, std::size_t k) {
  const Channel& coi = plan.at(i);
  const Channel& intf = plan.at(k);
  double fi = coi.center_freq, bi = coi.bandwidth, pi_w = coi.launch_power;
  double fk = intf.center_freq, bk = intf.bandwidth, pk_w = intf.launch_power;

  double ridge = bi / 4.0;
  double phi = phase_mismatch_xpm(fi, fk, fiber);
  if (phi != 0.0) ridge = std::min(ridge, fiber.alpha / (2.0 * std::fabs(phi)));

  double u_max = std::min(bi / 2.0, bk);

  auto eval = [&](int n) {
    AxisGrid ug = make_axis(-u_max, u_max, ridge, n, quad.grid_strategy);
    const GaussLegendreRule& r = gauss_legendre(n);
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
      double u = ug.u[a];
      double v_lo = std::max(-bk / 2.0, -u - bk / 2.0);
      double v_hi = std::min(bk / 2.0, -u + bk / 2.0);
      if (!(v_hi > v_lo)) continue;
      double mid = 0.5 * (v_lo + v_hi), half = 0.5 * (v_hi - v_lo);
      double inner = 0.0;
      for (int b = 0; b < n; ++b) {
        double v = mid + half * r.nodes[b];
        double w = phase_rate(fi + u, fk + v, fi, fiber);
        inner += r.weights[b] * lk_squared(kern, w, fk + u + v);
      }
      acc += ug.w[a] * half * inner;
    }
    return acc;
  };

  double integral = refine_to_tolerance(eval, quad, "eta_xpm_integral");
  double ratio = pk_w / pi_w;
  return (32.0 / 27.0) * fiber.gamma * fiber.gamma * ratio * ratio / (bk * bk) * integral;
}

// SPM self-term: the i = k pairing at half weight, 2D integral over the COI
// band with the same rectangle selector.
inline double eta_spm_self(const LinkKernel& kern, const ChannelPlan& plan,
                           const FiberParams& fiber, const QuadratureSpec& quad,
                           std::size_t i) {
  const Channel& coi = plan.at(i);
  double fi = coi.center_freq, bi = coi.bandwidth;

  double ridge = bi / 4.0;
  double c2 = 4.0 * kPi * kPi * std::fabs(fiber.beta2 + 2.0 * kPi * fiber.beta3 * fi);
  if (c2 > 0.0) ridge = std::min(ridge, std::sqrt(fiber.alpha / c2));

  auto eval = [&](int n) {
    AxisGrid ug = make_axis(-bi / 2.0, bi / 2.0, ridge, n, quad.grid_strategy);
    double acc = 0.0;
    for (int a = 0; a < n; ++a) {
      double u = ug.u[a];
      double v_lo = std::max(-bi / 2.0, -u - bi / 2.0);
      double v_hi = std::min(bi / 2.0, -u + bi / 2.0);
      if (!(v_hi > v_lo)) continue;
      AxisGrid vg = make_axis(v_lo, v_hi, ridge, n, quad.grid_strategy);
      double inner = 0.0;
      for (int b = 0; b < n; ++b) {
        double v = vg.u[b];
        double w = phase_rate(fi + u, fi + v, fi, fiber);
        inner += vg.w[b] * lk_squared(kern, w, fi + u + v);
      }
      acc += ug.w[a] * inner;
    }
    return acc;
  };

  double integral = refine_to_tolerance(eval, quad, "eta_spm_integral");
  return (16.0 / 27.0) * fiber.gamma * fiber.gamma / (bi * bi) * integral;
}

}  // namespace detail

// Squared modulus of the per-span distance integral at pump pair (f1, f2)
// beating against f_i, with the exact occupancy-aware ISRS normalizer.
inline double link_function(double f1, double f2, double f_i, const ChannelPlan& plan,
                            const FiberParams& fiber, const QuadratureSpec& quad) {
  for (double f : {f1, f2, f_i}) {
    if (f < plan.band_lo() || f > plan.band_hi()) {
      throw DomainError("link_function: frequency outside the transmitted band");
    }
  }
  detail::LinkKernel kern = detail::make_link_kernel(plan, fiber, quad);
  return detail::lk_squared(kern, detail::phase_rate(f1, f2, f_i, fiber), f1 + f2 - f_i);
}

inline double eta_spm_integral(const Channel& coi, const ChannelPlan& plan,
                               const FiberParams& fiber, const QuadratureSpec& quad) {
  detail::require_member(plan, coi, "eta_spm_integral");
  if (fiber.gamma == 0.0) return 0.0;
  detail::LinkKernel kern = detail::make_link_kernel(plan, fiber, quad);
  return detail::eta_spm_self(kern, plan, fiber, quad, coi.index);
}

inline double eta_xpm_integral(const Channel& coi, const Channel& interferer,
                               const ChannelPlan& plan, const FiberParams& fiber,
                               const QuadratureSpec& quad) {
  detail::require_member(plan, coi, "eta_xpm_integral");
  detail::require_member(plan, interferer, "eta_xpm_integral");
  if (coi.index == interferer.index) {
    throw DomainError("eta_xpm_integral: interferer must differ from the channel of interest");
  }
  if (fiber.gamma == 0.0) return 0.0;
  detail::LinkKernel kern = detail::make_link_kernel(plan, fiber, quad);
  return detail::eta_xpm_pair(kern, plan, fiber, quad, coi.index, interferer.index);
}

// SPM plus the XPM sum over all interferers, accumulated in index order so
// results are bit-identical regardless of any outer parallelism.
inline NliResult eta_total_integral(const Channel& coi, const ChannelPlan& plan,
                                    const FiberParams& fiber, const QuadratureSpec& quad) {
  detail::require_member(plan, coi, "eta_total_integral");
  NliResult res;
  res.channel_index = coi.index;
  res.model_tag = ModelTag::integral;
  if (fiber.gamma == 0.0) return res;

  detail::LinkKernel kern = detail::make_link_kernel(plan, fiber, quad);
  res.eta_spm = detail::eta_spm_self(kern, plan, fiber, quad, coi.index);
  res.eta_total = res.eta_spm;
  for (std::size_t k = 0; k < plan.size(); ++k) {
    if (k == coi.index) continue;
    double eta = detail::eta_xpm_pair(kern, plan, fiber, quad, coi.index, k);
    res.eta_xpm_by_interferer.emplace_back(k, eta);
    res.eta_total += eta;
  }
  return res;
}

}  // namespace qot

#endif  // QOT_GN_INTEGRAL_HPP
