#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sts/permutation.hpp"
#include "sts/point_set.hpp"
#include "sts/triple_system.hpp"

namespace sts {

// Labeling of Y - X by the cyclic group Z_m, written additively: the
// identity is 0, the involution is m/2 and "-a" (the involution times a) is
// a + m/2. The generator y_bullet is `generator`; omega is m/3.
struct CyclicLabeling {
  std::size_t m = 0;
  std::vector<Point> point_of;    // residue -> point of Y
  std::vector<Point> residue_of;  // point of Y -> residue, kNoPoint on X
  std::size_t generator = 0;

  // Which labeling conditions hold: no nontrivial group automorphism moves
  // the generator within its A6-coset; {0, m/2, generator} is a triple of
  // Y - X; when 3 | m, {w, w + m/2, generator} is a triple for w = m/3 and
  // w = 2m/3.
  bool rigid_generator = false;
  bool anchor_triple = false;
  bool omega_triples = false;

  bool conditions_hold() const { return rigid_generator && anchor_triple && (m % 3 != 0 || omega_triples); }

  std::size_t opposite(std::size_t a) const { return (a + m / 2) % m; }
  bool in_a6(std::size_t a) const { return 6 * a % m == 0; }
  std::vector<std::size_t> a6() const;
};

enum class LabelingMode {
  strict,       // throw unless every condition holds
  best_effort,  // satisfy what is satisfiable and record the rest in the flags
};

// True iff no unit u != 1 of Z_m has (u - 1) * g in A6.
bool generator_is_rigid(std::size_t m, std::size_t g);

// Labels Y - X by Z_m, m = |Y| - |X|. The generator is the smallest unit
// passing generator_is_rigid; in best-effort mode, failing that, the
// smallest unit outside A6, failing that 1. The generator's point is the
// first point of Y - X with enough triples inside Y - X for the anchors;
// remaining residues go to remaining points in ascending order.
// Throws std::invalid_argument when x is not closed and NotFound in strict
// mode when a condition cannot be met.
CyclicLabeling label_per_p7(const TripleSystem& y, const PointSet& x,
                            LabelingMode mode = LabelingMode::strict);

// Human-readable reasons the labeling is inconsistent with (y, x); empty
// when it is a bijection Y - X -> Z_m and every set flag is truthful.
std::vector<std::string> check_labeling(const TripleSystem& y, const PointSet& x,
                                        const CyclicLabeling& labeling);

struct MooreInput {
  TripleSystem y;
  PointSet x;
  TripleSystem v;
  CyclicLabeling labeling;
};

// Throws std::invalid_argument on a malformed input.
void validate_moore_input(const MooreInput& input);

// Point numbering of X u (V x Z_m): X first in ascending Y order, then the
// pair (v, a) at |X| + v*m + a.
class MooreLayout {
 public:
  MooreLayout() = default;
  MooreLayout(const PointSet& x, std::size_t v_size, std::size_t m);

  std::size_t size() const { return x_points_.size() + v_size_ * m_; }
  std::size_t x_size() const { return x_points_.size(); }
  std::size_t v_size() const { return v_size_; }
  std::size_t m() const { return m_; }

  bool is_x(Point u) const { return u < x_points_.size(); }
  Point of_x(Point y_point) const;
  Point of_pair(Point v, std::size_t a) const { return static_cast<Point>(x_points_.size() + v * m_ + a); }
  Point y_point_of(Point u) const { return x_points_.at(u); }
  std::pair<Point, std::size_t> pair_of(Point u) const;

 private:
  std::vector<Point> x_points_;
  std::vector<Point> x_index_;
  std::size_t v_size_ = 0;
  std::size_t m_ = 0;
};

struct MooreProduct {
  MooreInput input;
  MooreLayout layout;
  TripleSystem system;
  std::optional<Permutation> sigma;  // set for moore_variant_sigma outputs

  // "x<i>" for the point i of X, "(v,a)" for pairs.
  std::vector<std::string> names() const;
};

// X u (V x Z_m) with the triples of X, a copy of Y on X u (v x Z_m) for
// each v, and (v1,a1),(v2,a2),(v3,a3) for each triple of V with
// a1 + a2 + a3 = 0.
MooreProduct moore(const MooreInput& input);

// As moore, with the last family replaced by (v_i, sigma(a_i)). sigma acts
// on Z_m and must fix the generator and A6 pointwise.
MooreProduct moore_variant_sigma(const MooreInput& input, const Permutation& sigma);

// The automorphism of the product induced by g in Aut V: identity on X and
// (v, a) -> (g(v), a).
Permutation lift_automorphism(const MooreLayout& layout, const Permutation& g);

}  // namespace sts
