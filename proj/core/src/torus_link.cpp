#include "conevol/torus_link.hpp"

#include <numeric>
#include <utility>

#include "conevol/errors.hpp"
#include "json_detail.hpp"

namespace conevol {

TorusLinkParams::TorusLinkParams(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) {
    throw ValidationError("torus link parameters must satisfy p >= 1 and q >= 1, got (" +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  if (p > kMaxParameter || q > kMaxParameter) {
    throw ValidationError("torus link parameters above " +
                          std::to_string(kMaxParameter) + " are not accepted, got (" +
                          std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  swapped_ = p > q;
  if (swapped_) std::swap(p, q);
  p_ = p;
  q_ = q;
  gcd_ = std::gcd(p, q);
  lcm_ = p / gcd_ * q;
}

std::string to_json_string(const TorusLinkParams& params) {
  return detail::params_json(params).dump();
}

}  // namespace conevol
