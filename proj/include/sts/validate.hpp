#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sts/triple_system.hpp"

namespace sts {

struct ValidationReport {
  std::vector<std::string> violations;  // first `kMaxListed` only
  std::size_t violation_count = 0;

  static constexpr std::size_t kMaxListed = 64;

  bool ok() const { return violation_count == 0; }
  void add(std::string message);
  std::string summary() const;
};

// Checks the STS axioms: admissible order, exact triple count, and every
// pair in exactly one triple. Violations name the offending pair.
ValidationReport validate_sts(const PartialTripleSystem& ts);

// Pair coverage at most one.
ValidationReport validate_pstss(const PartialTripleSystem& ps);

}  // namespace sts
