#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sts/point_set.hpp"

namespace sts {

using Triple = std::array<Point, 3>;

inline constexpr Point kNoPoint = std::numeric_limits<Point>::max();

// Sorts the three points of a triple ascending.
Triple make_triple(Point a, Point b, Point c);

// Pair -> third point lookup over a triangular table. Memory is O(n^2).
class JoinTable {
 public:
  JoinTable() = default;
  JoinTable(std::size_t n, std::span<const Triple> triples);

  std::size_t size() const { return n_; }

  // Third point of the triple through a and b, or kNoPoint when the pair is
  // uncovered (or a == b).
  Point third(Point a, Point b) const {
    if (a == b) return kNoPoint;
    if (a > b) std::swap(a, b);
    return table_[index(a, b)];
  }

 private:
  static std::size_t index(Point lo, Point hi) {
    return static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo;
  }

  std::size_t n_ = 0;
  std::vector<Point> table_;
};

// Triples over points 0..n-1 covering every pair at most once. The
// constructor only normalizes (points sorted inside each triple, triples
// sorted lexicographically) and rejects structurally broken triples; pair
// coverage is the business of validate_pstss.
class PartialTripleSystem {
 public:
  PartialTripleSystem() : PartialTripleSystem(0, {}) {}
  PartialTripleSystem(std::size_t n, std::vector<Triple> triples);

  std::size_t size() const { return n_; }
  const std::vector<Triple>& triples() const { return *triples_; }

  // Built on first use and shared between copies.
  const JoinTable& joins() const;

  // Triples through each point, as indices into triples().
  const std::vector<std::vector<std::uint32_t>>& incidence() const;

  std::size_t degree(Point p) const { return incidence()[p].size(); }

  friend bool operator==(const PartialTripleSystem& a, const PartialTripleSystem& b) {
    return a.n_ == b.n_ && *a.triples_ == *b.triples_;
  }

 private:
  struct Cache;

  std::size_t n_;
  std::shared_ptr<const std::vector<Triple>> triples_;
  std::shared_ptr<Cache> cache_;
};

// A Steiner triple system: every pair in exactly one triple. As with the
// partial variant, construction does not check coverage; validate_sts does.
class TripleSystem : public PartialTripleSystem {
 public:
  using PartialTripleSystem::PartialTripleSystem;
};

// Number of triples an STS on n points has.
constexpr std::size_t sts_triple_count(std::size_t n) { return n * (n - 1) / 6; }

// n = 0, 1 or n = 1, 3 (mod 6).
constexpr bool is_admissible_order(std::size_t n) { return n % 6 == 1 || n % 6 == 3 || n == 0; }

// Closure of seed under third-point joins.
PointSet span(const PartialTripleSystem& ts, const PointSet& seed);

// As span, but gives up and returns nullopt once the closure exceeds cap.
std::optional<PointSet> span_capped(const PartialTripleSystem& ts, const PointSet& seed,
                                    std::size_t cap);

bool is_closed(const PartialTripleSystem& ts, const PointSet& set);

// The triples inside `points`, renumbered by ascending original index.
// Second member maps new index -> original point.
std::pair<TripleSystem, std::vector<Point>> induced_subsystem(const PartialTripleSystem& ts,
                                                              const PointSet& points);

// Relabels point p as image[p].
TripleSystem relabel(const PartialTripleSystem& ts, std::span<const Point> image);

}  // namespace sts
