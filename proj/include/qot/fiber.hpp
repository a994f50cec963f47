#ifndef QOT_FIBER_HPP
#define QOT_FIBER_HPP

#include <cmath>

#include "qot/errors.hpp"
#include "qot/units.hpp"

namespace qot {

// Per-span fiber physics. Strict SI:
//   alpha, alpha_bar : power attenuation, 1/m
//   beta2            : group-velocity dispersion, s^2/m
//   beta3            : dispersion slope, s^3/m
//   gamma            : Kerr nonlinearity coefficient, 1/(W*m)
//   cr               : slope of the linearized (triangular) Raman gain, 1/(W*m*Hz)
//   length           : span length, m
// alpha_bar is the effective asymptotic attenuation used by the closed-form
// constants; it defaults to alpha in every bundled scenario.
struct FiberParams {
  double alpha = 0.0;
  double alpha_bar = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  double gamma = 0.0;
  double cr = 0.0;
  double length = 0.0;

  void validate() const {
    if (!(alpha > 0.0)) throw DomainError("FiberParams: alpha must be > 0");
    if (!(alpha_bar > 0.0)) throw DomainError("FiberParams: alpha_bar must be > 0");
    if (!(gamma >= 0.0)) throw DomainError("FiberParams: gamma must be >= 0");
    if (!(cr >= 0.0)) throw DomainError("FiberParams: cr must be >= 0");
    if (!(length > 0.0)) throw DomainError("FiberParams: length must be > 0");
  }
};

// Standard SSMF defaults used by the bundled scenarios: 0.2 dB/km attenuation,
// -21.7 ps^2/km dispersion, 0.14 ps^3/km slope, 1.3 1/(W*km) nonlinearity,
// 0.028 1/(W*km*THz) Raman slope, 100 km span.
inline FiberParams default_ssmf(double length_m = 100e3) {
  FiberParams f;
  f.alpha = attenuation_from_db_per_km(0.2);
  f.alpha_bar = f.alpha;
  f.beta2 = -21.7e-27;
  f.beta3 = 0.14e-39;
  f.gamma = 1.3e-3;
  f.cr = 0.028 / (1e3 * 1e12);
  f.length = length_m;
  return f;
}

// Effective nonlinear length (1 - exp(-alpha*z))/alpha. Monotone increasing in
// z and bounded above by 1/alpha. expm1 keeps the small-alpha*z case accurate.
inline double effective_length(double alpha, double z) {
  if (!(alpha > 0.0)) throw DomainError("effective_length: alpha must be > 0");
  if (z < 0.0) throw DomainError("effective_length: z must be >= 0");
  return -std::expm1(-alpha * z) / alpha;
}

// SPM phase-mismatch factor phi_i = (3/2)*pi^2*(beta2 + 2*pi*beta3*f_i).
// Sign follows beta2; the closed form consumes |phi_i|.
inline double phase_mismatch_spm(double f_i, const FiberParams& fiber) {
  return 1.5 * kPi * kPi * (fiber.beta2 + 2.0 * kPi * fiber.beta3 * f_i);
}

// XPM phase-mismatch factor phi_ik = 2*pi^2*(f_k - f_i)*(beta2 + pi*beta3*(f_i + f_k)).
// Antisymmetric in the pair: swapping roles flips the (f_k - f_i) factor.
inline double phase_mismatch_xpm(double f_i, double f_k, const FiberParams& fiber) {
  if (f_k == f_i) {
    throw DomainError("phase_mismatch_xpm: f_k == f_i is the SPM pairing, not XPM");
  }
  return 2.0 * kPi * kPi * (f_k - f_i) * (fiber.beta2 + kPi * fiber.beta3 * (f_i + f_k));
}

}  // namespace qot

#endif  // QOT_FIBER_HPP
