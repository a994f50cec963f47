#pragma once

// Name-keyed registry of NLI evaluators. The engine and the CLI resolve
// models by string so alternative estimators can be swapped in without
// touching the propagation code. Two builtins are always available:
// "closed_form" and "integral" (the latter at default quadrature settings;
// use make_integral_handle to bind a custom QuadratureSpec).

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qot/channel.hpp"
#include "qot/errors.hpp"
#include "qot/fiber.hpp"
#include "qot/gn_closed_form.hpp"
#include "qot/gn_integral.hpp"
#include "qot/nli_types.hpp"

namespace qot {

struct NliModelHandle {
  std::string name;
  NliEvaluator evaluator;
};

// The integral evaluator reports trouble by throwing QuadratureError rather
// than through the warning sink, so the sink argument is ignored here.
inline NliModelHandle make_integral_handle(const QuadratureSpec& quad) {
  quad.validate();
  return {"integral",
          [quad](const Channel& coi, const ChannelPlan& plan, const FiberParams& fiber,
                 std::vector<ValidityWarning>*) {
            return eta_total_integral(coi, plan, fiber, quad);
          }};
}

namespace detail {

struct ModelRegistry {
  std::mutex mu;
  std::map<std::string, NliEvaluator> models;

  ModelRegistry() {
    models.emplace("closed_form",
                   [](const Channel& coi, const ChannelPlan& plan, const FiberParams& fiber,
                      std::vector<ValidityWarning>* warnings) {
                     return eta_total_closed(coi, plan, fiber, warnings);
                   });
    models.emplace("integral", make_integral_handle(QuadratureSpec{}).evaluator);
  }
};

inline ModelRegistry& model_registry() {
  static ModelRegistry reg;
  return reg;
}

}  // namespace detail

inline void register_model(const NliModelHandle& handle) {
  if (handle.name.empty() || !handle.evaluator) {
    throw ModelError("register_model: handle needs a name and an evaluator");
  }
  auto& reg = detail::model_registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto [it, inserted] = reg.models.emplace(handle.name, handle.evaluator);
  (void)it;
  if (!inserted) {
    throw ModelError("register_model: '" + handle.name + "' is already registered");
  }
}

inline NliEvaluator lookup_model(const std::string& name) {
  auto& reg = detail::model_registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto it = reg.models.find(name);
  if (it == reg.models.end()) {
    throw ModelError("lookup_model: unknown model '" + name + "'");
  }
  return it->second;
}

inline std::vector<std::string> registered_model_names() {
  auto& reg = detail::model_registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  std::vector<std::string> names;
  names.reserve(reg.models.size());
  for (const auto& [name, fn] : reg.models) {
    names.push_back(name);
  }
  return names;
}

}  // namespace qot
