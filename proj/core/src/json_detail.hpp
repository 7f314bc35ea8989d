#pragma once

#include <nlohmann/json.hpp>

#include "conevol/format.hpp"
#include "conevol/pi_scalar.hpp"
#include "conevol/torus_link.hpp"

namespace conevol::detail {

// {"coeff":"1/3","grade":2,"text":"1/3*pi^2","float":3.28986813370}.
// Exact zero keeps its grade: {"coeff":"0","grade":2,"text":"0","float":0.0}.
inline nlohmann::ordered_json scalar_json(const PiScalar& x) {
  nlohmann::ordered_json j;
  j["coeff"] = x.coeff().to_string();
  j["grade"] = x.grade();
  j["text"] = x.to_text();
  j["float"] = round_sig12(x.to_double());
  return j;
}

inline nlohmann::ordered_json params_json(const TorusLinkParams& params) {
  nlohmann::ordered_json j;
  j["p"] = params.p();
  j["q"] = params.q();
  j["gcd"] = params.gcd();
  j["lcm"] = params.lcm();
  j["components"] = params.components();
  j["normalized_swap"] = params.normalized_swap();
  return j;
}

}  // namespace conevol::detail
