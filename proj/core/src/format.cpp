#include "conevol/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace conevol {

std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

double round_sig12(double value) {
  return std::strtod(format_sig12(value).c_str(), nullptr);
}

}  // namespace conevol
