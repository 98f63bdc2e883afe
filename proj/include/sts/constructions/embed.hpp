#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sts/constructions/classic.hpp"
#include "sts/point_set.hpp"

namespace sts {

struct Embedding {
  LabeledSystem system;
  PointSet subsystem;
  std::string method;  // "base", "triple", "doubling", "product" or "completion"
};

// An STS on y0_size points with a closed subsystem on x_size points. Tries,
// in order: a base system when x_size <= 1; a triple of a base system when
// x_size = 3; repeated doubling of a base STS(x_size); a direct product
// STS(x_size) x STS(y0_size / x_size); backtracking completion of a base
// STS(x_size) within completion_budget nodes. Throws std::invalid_argument
// for inadmissible sizes or y0_size < 2 x_size + 1 and Unsupported when
// every tool fails.
Embedding embed_subsystem(std::size_t x_size, std::size_t y0_size,
                          std::uint64_t completion_budget = 2'000'000);

// Completes the partial system to an STS on n points by backtracking on the
// most constrained uncovered pair. Throws BudgetExceeded past node_budget
// and NotFound when no completion exists.
TripleSystem complete_sts(std::size_t n, std::vector<Triple> fixed, std::uint64_t node_budget);

}  // namespace sts
