#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sts/constructions/moore.hpp"
#include "sts/subsystems.hpp"

namespace sts {

// A plane on x in X and the pairs (v_i, a_i), (v_i, a_i + m/2) over a triple
// v_1 v_2 v_3 of V, with a_1 + a_2 + a_3 = 0 and each {a_i, a_i + m/2, x} a
// triple of Y. v is ascending.
struct Type31 {
  Point x;  // point of Y
  std::array<Point, 3> v;
  std::array<std::size_t, 3> a;
};

// A plane inside X u (v x Z_m). inside_x marks planes of X itself, which
// lie in every such copy; v is then 0.
struct InYv {
  Point v;
  bool inside_x;
};

// {(s, f(s)) : s in S} for a subsystem S of V and f: S -> A6 summing to 0
// on every triple of S. f[i] is the value at s[i].
struct VSf {
  std::vector<Point> s;
  std::vector<std::size_t> f;
};

using FanoKind = std::variant<Type31, InYv, VSf>;

struct FanoClassification {
  FanoPoints points;
  FanoKind kind;

  std::string describe() const;
};

// A plane of a Moore product fitting none of the three kinds.
class Unclassifiable : public std::runtime_error {
 public:
  explicit Unclassifiable(const std::string& what) : std::runtime_error(what) {}
};

// Requires an untwisted product with m even and a plane of u.system;
// throws std::invalid_argument otherwise and Unclassifiable when the plane
// fits no kind.
FanoClassification classify_fano(const MooreProduct& u, const FanoPoints& fano);

// X u (v x Z_m).
PointSet yv_subsystem(const MooreProduct& u, Point v);

// Every (S, f) with S a triple of V, a PG(2,2) subsystem of V, or V itself.
std::vector<VSf> all_vsf(const MooreProduct& u);

PointSet vsf_points(const MooreProduct& u, const VSf& vsf);

struct Recognition {
  enum class Kind { is_yv, is_vvf, other };

  Kind kind = Kind::other;
  Point v = 0;                  // for is_yv
  std::vector<std::size_t> f;   // for is_vvf, indexed by point of V
  std::string note;
};

// Tests whether a closed set of the product is some X u (v x Z_m) (when it
// has |Y| points) or some {(v, f(v)) : v in V} (when it has |V| points and
// meets each copy of Y at most once). Anything else is reported as other
// with a note. Throws std::invalid_argument if w is not closed.
Recognition recognize_subsystem(const MooreProduct& u, const PointSet& w);

}  // namespace sts
