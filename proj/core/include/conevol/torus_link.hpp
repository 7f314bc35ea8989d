#pragma once

#include <cstdint>
#include <string>

namespace conevol {

/// Validated parameters of a torus knot or link t(p, q).
///
/// Construction normalizes to p <= q (the two orders give isotopic links),
/// and caches gcd, lcm and the component count, which equals gcd(p, q).
class TorusLinkParams {
public:
  /// Accepted parameter range; larger values are rejected so exact squared
  /// coefficients and parameter sweeps stay tractable.
  static constexpr std::int64_t kMaxParameter = 1000000;

  TorusLinkParams(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t gcd() const noexcept { return gcd_; }
  std::int64_t lcm() const noexcept { return lcm_; }
  std::int64_t components() const noexcept { return gcd_; }

  /// True when the constructor swapped the inputs to enforce p <= q.
  bool normalized_swap() const noexcept { return swapped_; }

  /// A knot has one component, i.e. gcd(p, q) = 1.
  bool is_knot() const noexcept { return gcd_ == 1; }

  /// t(1, q) is the unknot; its singular set is degenerate and reports
  /// should flag it.
  bool is_degenerate_unknot() const noexcept { return p_ == 1; }

  friend bool operator==(const TorusLinkParams& a, const TorusLinkParams& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t gcd_;
  std::int64_t lcm_;
  bool swapped_;
};

/// {"p":..,"q":..,"gcd":..,"lcm":..,"components":..,"normalized_swap":..}
std::string to_json_string(const TorusLinkParams& params);

}  // namespace conevol
