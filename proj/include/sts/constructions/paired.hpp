#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sts/constructions/classic.hpp"

namespace sts {

// A 2-(w, k, 1) design: every pair of the w points in exactly one block.
struct BlockDesign {
  std::size_t points = 0;
  std::vector<std::vector<Point>> blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
};

// The triples of an STS read as a 2-(n, 3, 1) design.
BlockDesign design_from_sts(const TripleSystem& ts);

// Throws std::invalid_argument unless d is a 2-(w, k, 1) design with k >= 2.
void validate_design(const BlockDesign& d);

// The system on {inf} u ({1,2} x W) that carries a copy of s on
// {inf} u ({1,2} x B) for each block B, where every {inf, (1,b), (2,b)} is a
// triple. inf is point 0, (1,b) is 1 + b and (2,b) is 1 + w + b.
//
// If s is PG(2,2)-paired the first copy is used on every block; otherwise
// the distinct copies of s per block are searched depth first for a choice
// whose union is PG(2,2)-paired. Throws std::invalid_argument when
// |s| != 2k + 1, NotFound when no choice is paired and BudgetExceeded past
// node_budget search nodes.
LabeledSystem paired_via_design(const TripleSystem& s, const BlockDesign& w,
                                std::uint64_t node_budget = 1'000'000);

}  // namespace sts
