#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sts/triple_system.hpp"

namespace sts {

// A system together with a human-readable name per point, written to the
// sidecar map file by the CLI.
struct LabeledSystem {
  TripleSystem system;
  std::vector<std::string> names;
};

// Names each point by its index.
LabeledSystem with_index_names(TripleSystem ts);

// Bose construction over Z_{2t+1} x Z_3 for n = 6t + 3. Point (x, i) has
// index 3x + i.
LabeledSystem bose(std::size_t n);

// Skolem construction over {inf} u Z_{2t} x Z_3 for n = 6t + 1. inf is
// point 0 and (x, i) has index 1 + 3x + i.
LabeledSystem skolem(std::size_t n);

// bose or skolem, whichever applies; n = 0 gives the empty system.
LabeledSystem steiner_system(std::size_t n);

// Points and lines of PG(d, 2). The nonzero vector with bit pattern p is
// point p - 1.
LabeledSystem pg_sts(unsigned d);

// 2Y + 1 on Y, a mirror copy Y_1 and one new point. Point y of Y keeps its
// index, its mirror is |Y| + y and the new point is 2|Y|.
LabeledSystem doubling(const LabeledSystem& y, const std::string& star_name = "*");
LabeledSystem doubling(const TripleSystem& y);

// Index of the new point of doubling() on a system of the given size.
constexpr Point doubling_star(std::size_t y_size) { return static_cast<Point>(2 * y_size); }

// In doubling(doubling(Y)), the new point of the inner doubling and its
// mirror. The result is PG(3,2)-2-pointed with respect to this pair.
constexpr std::pair<Point, Point> double_doubling_pair(std::size_t y_size) {
  return {doubling_star(y_size), static_cast<Point>(doubling_star(y_size) + 2 * y_size + 1)};
}

// A x B with (a, b) at index a|B| + b.
LabeledSystem direct_product(const LabeledSystem& a, const LabeledSystem& b);
LabeledSystem direct_product(const TripleSystem& a, const TripleSystem& b);

}  // namespace sts
