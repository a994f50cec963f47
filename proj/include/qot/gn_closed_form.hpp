#ifndef QOT_GN_CLOSED_FORM_HPP
#define QOT_GN_CLOSED_FORM_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/fiber.hpp"
#include "qot/nli_types.hpp"
#include "qot/units.hpp"

namespace qot {

// Squared tilt-adjusted decay rate. The ISRS transfer tilts the span power
// profile by exp(-P_tot*Cr*f*(1 - exp(-alpha*z))/alpha); resumming that
// first-order effect into the two-pole rational kernel shifts the combined
// decay alpha + alpha_bar by P_tot*Cr*f for content near frequency f.
inline double t_factor(const FiberParams& fiber, double p_tot, double f) {
  double base = fiber.alpha + fiber.alpha_bar - p_tot * fiber.cr * f;
  return base * base;
}

// The constants the closed form reduces a channel pairing to. The squared
// span kernel is modeled as (T + w^2) / ((alpha^2 + w^2) * (A^2 + w^2)) with
// w = phi * f1 * f2 over the pump-offset pair; everything downstream is an
// exact frequency integral of that shape.
struct ClosedFormConstants {
  double alpha;  // fast pole: decay rate of the span power profile
  double T;      // numerator constant, t_factor(...) at the relevant frequency
  double A;      // slow pole: alpha + alpha_bar
  double phi;    // signed phase-mismatch coefficient; magnitudes are consumed
};

inline ClosedFormConstants spm_constants(const FiberParams& fiber, double p_tot, double f_i) {
  return {fiber.alpha, t_factor(fiber, p_tot, f_i), fiber.alpha + fiber.alpha_bar,
          phase_mismatch_spm(f_i, fiber)};
}

inline ClosedFormConstants xpm_constants(const FiberParams& fiber, double p_tot, double f_i,
                                         double f_k) {
  return {fiber.alpha, t_factor(fiber, p_tot, f_k), fiber.alpha + fiber.alpha_bar,
          phase_mismatch_xpm(f_i, f_k, fiber)};
}

// Rational model of the squared span kernel at pump offsets (f1, f2).
// Without Raman transfer T equals A^2 and this collapses to the single-pole
// Lorentzian 1/(alpha^2 + w^2).
inline double step4_xpm_integrand(const ClosedFormConstants& c, double f1, double f2) {
  double w = c.phi * f1 * f2;
  double w2 = w * w;
  double a2 = c.alpha * c.alpha;
  return (c.T + w2) / ((a2 + w2) * (c.A * c.A + w2));
}

enum class FrequencyCheckMode { spm_asinh, xpm_atan };

// The bracketed frequency integral both eta formulas share, after the 2D
// (self-channel, asinh) or strip (cross-channel, atan) domain reduction:
//   spm_asinh: ((T - a^2)/a)*asinh(|phi| b^2/(pi a)) + ((A^2 - T)/A)*asinh(|phi| b^2/(pi A))
//   xpm_atan:  ((T - a^2)/a)*atan(|phi| b/a)         + ((A^2 - T)/A)*atan(|phi| b/A)
// b is the channel-of-interest bandwidth in both modes. Exposed separately so
// the domain-reduction step can be validated against direct quadrature.
inline double step5_frequency_integral_check(const ClosedFormConstants& c, double b_i,
                                             FrequencyCheckMode mode) {
  double a = c.alpha;
  double a2 = a * a;
  double big_a2 = c.A * c.A;
  double phi = std::fabs(c.phi);
  if (mode == FrequencyCheckMode::spm_asinh) {
    return ((c.T - a2) / a) * std::asinh(phi * b_i * b_i / (kPi * a)) +
           ((big_a2 - c.T) / c.A) * std::asinh(phi * b_i * b_i / (kPi * c.A));
  }
  return ((c.T - a2) / a) * std::atan(phi * b_i / a) +
         ((big_a2 - c.T) / c.A) * std::atan(phi * b_i / c.A);
}

namespace detail {

inline void check_span_loss(const FiberParams& fiber, std::vector<ValidityWarning>* sink) {
  double residual = std::exp(-fiber.alpha * fiber.length);
  if (residual > 0.05) {
    warn(sink, "low_loss_span",
         "span attenuates to only " + std::to_string(residual) +
             " of launch power; the formulas assume the nonlinear interaction dies out "
             "well before the span ends");
  }
}

}  // namespace detail

// Self-channel contribution in closed form.
inline double eta_spm_closed(const Channel& coi, const ChannelPlan& plan,
                             const FiberParams& fiber,
                             std::vector<ValidityWarning>* warnings = nullptr) {
  detail::require_member(plan, coi, "eta_spm_closed");
  fiber.validate();
  if (fiber.gamma == 0.0) return 0.0;
  detail::check_span_loss(fiber, warnings);

  ClosedFormConstants c = spm_constants(fiber, plan.total_power(), coi.center_freq);
  if (c.phi == 0.0) {
    throw DomainError(
        "eta_spm_closed: zero net dispersion at the channel frequency is outside this "
        "approximation");
  }
  double b = coi.bandwidth;
  double bracket = step5_frequency_integral_check(c, b, FrequencyCheckMode::spm_asinh);
  double pref = (4.0 / 9.0) * fiber.gamma * fiber.gamma / (b * b) * kPi /
                (std::fabs(c.phi) * fiber.alpha_bar * (2.0 * fiber.alpha + fiber.alpha_bar));
  return pref * bracket;
}

// Cross-channel contribution of one interferer in closed form.
inline double eta_xpm_closed_single(const Channel& coi, const Channel& interferer,
                                    const ChannelPlan& plan, const FiberParams& fiber,
                                    std::vector<ValidityWarning>* warnings = nullptr) {
  detail::require_member(plan, coi, "eta_xpm_closed_single");
  detail::require_member(plan, interferer, "eta_xpm_closed_single");
  if (coi.index == interferer.index) {
    throw DomainError("eta_xpm_closed_single: interferer must differ from the channel of interest");
  }
  fiber.validate();
  if (fiber.gamma == 0.0) return 0.0;
  detail::check_span_loss(fiber, warnings);

  double f_i = coi.center_freq, f_k = interferer.center_freq;
  double b_i = coi.bandwidth, b_k = interferer.bandwidth;
  if (std::fabs(f_k - f_i) < b_k) {
    detail::warn(warnings, "narrow_separation",
                 "channels " + std::to_string(coi.index) + " and " +
                     std::to_string(interferer.index) +
                     " are separated by less than the interferer bandwidth; the "
                     "rectangular-kernel reduction loses accuracy here");
  }

  ClosedFormConstants c = xpm_constants(fiber, plan.total_power(), f_i, f_k);
  if (c.phi == 0.0) {
    throw DomainError(
        "eta_xpm_closed_single: the channel pair is phase-matched (zero net dispersion); "
        "outside this approximation");
  }
  double ratio = interferer.launch_power / coi.launch_power;
  double bracket = step5_frequency_integral_check(c, b_i, FrequencyCheckMode::xpm_atan);
  double pref = (32.0 / 27.0) * ratio * ratio * fiber.gamma * fiber.gamma /
                (b_k * std::fabs(c.phi) * fiber.alpha_bar *
                 (2.0 * fiber.alpha + fiber.alpha_bar));
  return pref * bracket;
}

// Self term plus the cross-term sum over all interferers, accumulated in
// index order so results are bit-identical regardless of outer parallelism.
inline NliResult eta_total_closed(const Channel& coi, const ChannelPlan& plan,
                                  const FiberParams& fiber,
                                  std::vector<ValidityWarning>* warnings = nullptr) {
  detail::require_member(plan, coi, "eta_total_closed");
  NliResult res;
  res.channel_index = coi.index;
  res.model_tag = ModelTag::closed_form;
  if (fiber.gamma == 0.0) return res;

  res.eta_spm = eta_spm_closed(coi, plan, fiber, warnings);
  res.eta_total = res.eta_spm;
  for (std::size_t k = 0; k < plan.size(); ++k) {
    if (k == coi.index) continue;
    double eta = eta_xpm_closed_single(coi, plan.at(k), plan, fiber, warnings);
    res.eta_xpm_by_interferer.emplace_back(k, eta);
    res.eta_total += eta;
  }
  return res;
}

}  // namespace qot

#endif  // QOT_GN_CLOSED_FORM_HPP
