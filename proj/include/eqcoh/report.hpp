#pragma once

#include <string>
#include <vector>

namespace eqcoh {

/// One located failure of a checked identity or invariant.
struct Violation {
  std::string where;   // identity name + indices, e.g. "jacobi(1,2,3,1)"
  std::string detail;  // residual value or mismatch description
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string where, std::string detail) {
    violations.push_back({std::move(where), std::move(detail)});
  }
  void merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  std::string summary(size_t max_lines = 10) const;
};

}  // namespace eqcoh
