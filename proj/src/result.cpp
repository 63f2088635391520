#include "hoopoe/result.hpp"

#include <string>

namespace hoopoe {

std::string_view to_string(Mode m) noexcept {
  switch (m) {
    case Mode::init: return "init";
    case Mode::diversify: return "diversify";
    case Mode::probe: return "probe";
    case Mode::dig: return "dig";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  for (Mode m : {Mode::init, Mode::diversify, Mode::probe, Mode::dig})
    if (to_string(m) == s) return m;
  throw InvalidArgument("unknown trace mode '" + std::string(s) + "'");
}

}  // namespace hoopoe
