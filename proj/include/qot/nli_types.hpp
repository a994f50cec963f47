#ifndef QOT_NLI_TYPES_HPP
#define QOT_NLI_TYPES_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qot/channel.hpp"
#include "qot/fiber.hpp"

namespace qot {

enum class ModelTag { integral, closed_form };

// Per-channel NLI coefficients, normalized so P_NLI = eta_total * P_i^3.
struct NliResult {
  std::size_t channel_index = 0;
  double eta_spm = 0.0;  // 1/W^2
  std::vector<std::pair<std::size_t, double>> eta_xpm_by_interferer;
  double eta_total = 0.0;  // 1/W^2
  ModelTag model_tag = ModelTag::integral;
};

// Non-fatal note a model attaches when inputs stray outside the regime its
// approximations were derived for. `code` is stable and machine-checkable;
// `message` carries the specifics.
struct ValidityWarning {
  std::string code;
  std::string message;
};

// Common call signature every NLI estimator conforms to. The warning sink may
// be null; estimators that signal trouble by throwing simply ignore it.
using NliEvaluator = std::function<NliResult(
    const Channel&, const ChannelPlan&, const FiberParams&, std::vector<ValidityWarning>*)>;

namespace detail {

// Appends unless an identical entry is already present: per-interferer entry
// points re-check shared conditions, and a combined evaluation should not
// repeat one warning per interferer.
inline void warn(std::vector<ValidityWarning>* sink, const char* code, std::string message) {
  if (sink == nullptr) return;
  for (const ValidityWarning& w : *sink) {
    if (w.code == code && w.message == message) return;
  }
  sink->push_back({code, std::move(message)});
}

}  // namespace detail

}  // namespace qot

#endif  // QOT_NLI_TYPES_HPP
