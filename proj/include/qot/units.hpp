#ifndef QOT_UNITS_HPP
#define QOT_UNITS_HPP

#include <cmath>
#include <numbers>

#include "qot/errors.hpp"

namespace qot {

// Planck constant, J*s (exact by the 2019 SI definition).
inline constexpr double kPlanck = 6.62607015e-34;

inline constexpr double kPi = std::numbers::pi;

// All internal quantities are strict SI (Hz, W, m, s). The helpers below live
// at the boundary between engineering units and the internal system.

inline double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

inline double dbm_to_watt(double p_dbm) { return 1e-3 * db_to_linear(p_dbm); }

inline double watt_to_dbm(double p_w) { return 10.0 * std::log10(p_w * 1e3); }

// dB/km -> 1/m under the power-attenuation convention P(z) = P(0)*exp(-alpha*z).
inline double attenuation_from_db_per_km(double a_db_per_km) {
  if (a_db_per_km < 0.0) {
    throw DomainError("attenuation_from_db_per_km: negative dB/km value");
  }
  return a_db_per_km * std::numbers::ln10 / (10.0 * 1000.0);
}

inline double attenuation_to_db_per_km(double alpha_per_m) {
  return alpha_per_m * 10.0 * 1000.0 / std::numbers::ln10;
}

}  // namespace qot

#endif  // QOT_UNITS_HPP
