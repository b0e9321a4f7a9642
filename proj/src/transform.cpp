#include "unimagic/transform.hpp"

#include <stdexcept>

namespace unimagic {

std::string_view to_string(Atomic a) {
  switch (a) {
    case Atomic::Rot180: return "rot180";
    case Atomic::MirrorH: return "mirror-h";
    case Atomic::MirrorV: return "mirror-v";
    case Atomic::DigitReverse: return "digit-reverse";
  }
  return "?";
}

std::optional<Atomic> parse_atomic(std::string_view name) {
  for (Atomic a : kAllAtomics) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::vector<Atomic> parse_atomic_list(std::string_view list) {
  std::vector<Atomic> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto name = list.substr(0, comma);
    if (name != "identity" && !name.empty()) {
      const auto a = parse_atomic(name);
      if (!a) throw std::invalid_argument("unknown transform '" + std::string(name) + "'");
      out.push_back(*a);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::string describe(const InvalidDigit& e) {
  return std::string(to_string(e.atomic)) + ": digit " + std::to_string(e.digit) + " in cell (" +
         std::to_string(e.row) + ", " + std::to_string(e.col) + ") has no image";
}

}  // namespace unimagic
