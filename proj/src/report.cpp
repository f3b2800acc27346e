#include "eqcoh/report.hpp"

namespace eqcoh {

std::string ValidationReport::summary(size_t max_lines) const {
  std::string out;
  size_t shown = 0;
  for (const auto& v : violations) {
    if (shown++ == max_lines) {
      out += "  ... (" + std::to_string(violations.size() - max_lines) +
             " more)\n";
      break;
    }
    out += "  " + v.where + ": " + v.detail + "\n";
  }
  return out;
}

}  // namespace eqcoh
