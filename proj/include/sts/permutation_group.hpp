#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sts/permutation.hpp"

namespace sts {

using BigInt = boost::multiprecision::cpp_int;

// Permutation group held as a base and strong generating set, built with
// deterministic Schreier-Sims. Supports order, membership, point
// stabilizers and (for small groups) element enumeration.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  // `base_prefix` seeds the base; the chain then exposes pointwise
  // stabilizers of that prefix at the corresponding levels.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::span<const Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Point>& base() const { return base_; }

  BigInt order() const;
  bool contains(const Permutation& g) const;

  // Orbit of p under the whole group, sorted.
  std::vector<Point> orbit(Point p) const;

  // Orbit partition as a representative map: rep[p] = least point of p's orbit.
  std::vector<Point> orbit_representatives() const;

  // Generators of the pointwise stabilizer of `points`.
  std::vector<Permutation> stabilizer_generators(std::span<const Point> points) const;

  // Calls visit on every element; intended for groups of modest order.
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

 private:
  struct Level {
    Point base_point;
    std::vector<Permutation> strong;      // generators fixing earlier base points
    std::vector<Point> orbit;             // orbit of base_point under `strong`
    std::vector<int> transversal_index;   // point -> index into transversal, -1 if absent
    std::vector<Permutation> transversal; // u with base_point^u = orbit point
  };

  void rebuild_orbit(Level& level) const;
  // Strips g through levels from `start`; returns the residue and the
  // first level at which it could not be sifted (levels_.size() if none).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start) const;
  void extend_base_for(const Permutation& g);
  void schreier_sims();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

}  // namespace sts
