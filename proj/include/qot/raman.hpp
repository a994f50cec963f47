#ifndef QOT_RAMAN_HPP
#define QOT_RAMAN_HPP

#include <cmath>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/fiber.hpp"

namespace qot {

// ISRS tilt state at distance z: x(z) = P_tot * C_r * L_eff(z), units 1/Hz, so
// that x*f is the dimensionless tilt exponent at (relative) frequency f.
struct RamanState {
  double x = 0.0;
  double z = 0.0;
  double total_bandwidth = 0.0;
};

inline double tilt_coordinate(const ChannelPlan& plan, const FiberParams& fiber, double z) {
  if (z < 0.0 || z > fiber.length) {
    throw DomainError("tilt_coordinate: z outside [0, span length]");
  }
  return plan.total_power() * fiber.cr * effective_length(fiber.alpha, z);
}

namespace detail {

// sinh(u)/u with a series branch so the u -> 0 limit is exact.
inline double sinhc(double u) {
  double a = std::fabs(u);
  if (a < 1e-5) {
    double u2 = u * u;
    return 1.0 + u2 / 6.0 + u2 * u2 / 120.0;
  }
  return std::sinh(u) / u;
}

}  // namespace detail

// Band-average of exp(-x*nu) for a spectrally uniform transmit PSD over a band
// of width b_tot centered at nu = 0: (2/(x*b_tot))*sinh(x*b_tot/2). The series
// branch handles the x*b_tot -> 0 limit (value 1) without a 0/0.
inline double uniform_spectrum_normalizer(double x, double b_tot) {
  if (!(b_tot > 0.0)) throw DomainError("uniform_spectrum_normalizer: b_tot must be > 0");
  if (x < 0.0) throw DomainError("uniform_spectrum_normalizer: x must be >= 0");
  return detail::sinhc(0.5 * x * b_tot);
}

// Same average for the actual (possibly gapped, non-uniform power) loadout:
// sum_k (P_k/P_tot) * exp(-x*f_k) * sinhc(x*B_k/2). Coincides with the uniform
// normalizer for a gapless equal-power plan centered at f = 0. The integral
// oracle uses this; the closed form assumes the uniform one.
inline double occupancy_spectrum_normalizer(const ChannelPlan& plan, double x) {
  double acc = 0.0;
  for (const Channel& c : plan.channels()) {
    acc += c.launch_power * std::exp(-x * c.center_freq) * detail::sinhc(0.5 * x * c.bandwidth);
  }
  return acc / plan.total_power();
}

// Loss-stripped ISRS tilt factor exp(-x*f)/normalizer; identically 1 at x = 0.
inline double isrs_gain_factor(double x, double f, double b_tot) {
  if (!(b_tot > 0.0)) throw DomainError("isrs_gain_factor: b_tot must be > 0");
  return std::exp(-x * f) / uniform_spectrum_normalizer(x, b_tot);
}

// Normalized signal power evolution rho(z, f) = exp(-alpha*z) * tilt factor
// under the uniform-spectrum approximation. The tilt is taken about the band
// midpoint so total power is conserved even when the plan is not centered at
// f = 0 (for the bundled scenarios the midpoint is 0 and this reduces to the
// plain exp(-x*f) form).
inline double normalized_power_profile(const ChannelPlan& plan, const FiberParams& fiber,
                                       double z, double f) {
  if (f < plan.band_lo() || f > plan.band_hi()) {
    throw DomainError("normalized_power_profile: f outside the transmitted band");
  }
  double x = tilt_coordinate(plan, fiber, z);
  double mid = 0.5 * (plan.band_lo() + plan.band_hi());
  return std::exp(-fiber.alpha * z) * isrs_gain_factor(x, f - mid, plan.total_bandwidth());
}

}  // namespace qot

#endif  // QOT_RAMAN_HPP
