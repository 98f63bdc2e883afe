#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sts/triple_system.hpp"

namespace sts {

using FanoPoints = std::array<Point, 7>;

// The PG(2,2) subsystem generated by three non-collinear points, sorted.
// nullopt when the points are collinear, a join is missing, or the closure
// has more than seven points.
std::optional<FanoPoints> fano_generated_by(const PartialTripleSystem& ts, Point a, Point b,
                                            Point c);

// True iff every two intersecting triples generate a PG(2,2), i.e. ts is the
// point-line system of some PG(d,2). Systems with fewer than 7 points count
// as projective only when they are a single point or a single line.
bool is_projective(const PartialTripleSystem& ts);

// Every PG(2,2) subsystem, each once, sorted lexicographically.
std::vector<FanoPoints> enumerate_fano(const PartialTripleSystem& ts);

}  // namespace sts
