#pragma once

#include <string>
#include <vector>

#include "sts/triple_system.hpp"

namespace sts {

// Outcome of an exhaustive geometric predicate. On failure, counterexample
// holds the points that broke it and detail says how.
struct PredicateResult {
  bool holds = true;
  std::vector<Point> counterexample;
  std::string detail;

  explicit operator bool() const { return holds; }
};

// Any two triples through p generate a PG(2,2).
PredicateResult is_pg2_pointed(const TripleSystem& ts, Point p);

// Any four points including p and q generate a PG(2,2) or a PG(3,2).
// Requires more than seven points.
PredicateResult is_pg3_2pointed(const TripleSystem& ts, Point p, Point q);

// Any two points lie in at least two PG(2,2) subsystems. Each pair is
// settled by finding two distinct planes through it.
PredicateResult is_pg2_paired(const TripleSystem& ts);

}  // namespace sts
