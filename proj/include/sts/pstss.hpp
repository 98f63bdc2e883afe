#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sts/point_set.hpp"
#include "sts/triple_system.hpp"

namespace sts {

struct LabeledPartialSystem {
  PartialTripleSystem system;
  std::vector<std::string> names;
};

struct CyclicPstss {
  std::size_t t = 0;
  PartialTripleSystem system;        // 2t points
  std::vector<Triple> cycle_order;   // T_0, ..., T_{t-1}; consecutive ones meet
};

// T_j = {p_2j, p_2j+1, p_(2j+2 mod 2t)}. Throws std::invalid_argument for t < 3.
CyclicPstss cyclic_pstss(std::size_t t);

// Triple-intersection graph is one cycle of length >= 3 and every point
// lies in one or two triples.
bool is_cyclic(const PartialTripleSystem& ps);

struct GadgetQ {
  std::size_t n = 0;
  PartialTripleSystem system;  // 4n + 10 points
  Point z = 0, z_prime = 0;
  Point z1 = 0, z2 = 0, z1_prime = 0, z2_prime = 0;
  std::vector<Point> c1, c2;  // points of the two cyclic components, z first
};

// z = 0, then C1 - z, then C2 - z, then z'. |C_i| = 2n + 2i + 2.
// Throws std::invalid_argument for n < 1.
GadgetQ build_q(std::size_t n);

// Same shape with parameter r.
GadgetQ build_qr(std::size_t r);

struct AttachedSystem {
  PartialTripleSystem system;
  std::vector<Point> anchor;  // V point whose gadget holds each point
  std::vector<std::string> names;
};

// V points keep their indices; gadget Q(x) follows for each x in order,
// sharing only its z with x. Throws std::invalid_argument for an empty v.
AttachedSystem attach_gadgets(const PartialTripleSystem& v);

// As attach_gadgets with build_qr(sizes[x]) at point x.
AttachedSystem attach_gadgets(const PartialTripleSystem& v, const std::vector<std::size_t>& sizes);

inline constexpr unsigned kDefaultNPrimeCap = 20;

// Nonempty subsets of an n'-set as nonzero bit patterns; point p is
// pattern p + 1 and the lines are {a, b, a xor b}.
class BooleanSpace {
 public:
  // Throws Unsupported when n_prime exceeds cap, std::invalid_argument for 0.
  explicit BooleanSpace(unsigned n_prime, unsigned cap = kDefaultNPrimeCap);

  unsigned ground_size() const { return n_prime_; }
  std::size_t size() const { return (std::size_t{1} << n_prime_) - 1; }

  static std::uint64_t pattern_of(Point p) { return static_cast<std::uint64_t>(p) + 1; }
  static Point point_of(std::uint64_t pattern) { return static_cast<Point>(pattern - 1); }
  static Point singleton(unsigned i) { return point_of(std::uint64_t{1} << i); }
  static Point line_third(Point a, Point b) { return point_of(pattern_of(a) ^ pattern_of(b)); }
  static bool is_line(Point a, Point b, Point c) { return (pattern_of(a) ^ pattern_of(b) ^ pattern_of(c)) == 0; }

  TripleSystem to_system() const;

 private:
  unsigned n_prime_;
};

BooleanSpace boolean_space(unsigned n_prime, unsigned cap = kDefaultNPrimeCap);

struct Replacement {
  std::array<Triple, 4> removed;  // ab ac bc, a b ab, a c ac, b c bc
  std::array<Triple, 4> added;    // a b c, a ab ac, b ab bc, c ac bc
};

// The swap for one triple {a, b, c} of V' (indices of singletons).
Replacement replacement_for(const Triple& vprime_triple);

// P with every triple of v' swapped. Throws std::invalid_argument when v'
// has more points than the ground set or covers a pair twice.
TripleSystem replace_triples(const BooleanSpace& p, const PartialTripleSystem& vprime);

struct ReconstructOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 64;
  std::size_t min_valid = 8;
};

// The 7-set U(p, x, y) = {p, x, y, x1, y1, z, q}, or empty when some join is
// missing or the points are not distinct.
std::vector<Point> witness_set(const PartialTripleSystem& u, Point p, Point x, Point y);

// Closure of a 7-set under joins by triples holding at most one of x, y, z.
bool witness_closed(const PartialTripleSystem& u, const std::vector<Point>& set, Point x, Point y, Point z);

// The line of P through x and y, read off U alone: samples p, keeps the
// witness sets passing witness_closed and takes the majority third point.
// Throws NotFound when fewer than min_valid samples pass.
Triple reconstruct_line(const PartialTripleSystem& u, Point x, Point y, const ReconstructOptions& options = {});

// Points of V' recovered from U: X is the set of triples of U that are not
// lines of P; a point on more than two of them is in V', as is a point on
// exactly two of them, one of which has both other points of the first kind.
PointSet recover_vprime(const PartialTripleSystem& u, const BooleanSpace& p);

// Each point pattern of a pair ab of a V' triple lies on exactly two
// triples of U outside P. Returns the offending points.
std::vector<Point> pair_points_off_by_degree(const PartialTripleSystem& u, const BooleanSpace& p,
                                             const PartialTripleSystem& vprime);

// attach_gadgets then replace_triples on 4n^2 + 10n ground points.
struct Theorem13Result {
  AttachedSystem vprime;
  BooleanSpace space;
  TripleSystem system;
};
Theorem13Result theorem13_build(const PartialTripleSystem& v, unsigned cap = kDefaultNPrimeCap);

// V, then x' for each x in v1 ascending, then z; one triple {x, x', z} per
// x in v1. Throws std::invalid_argument unless v1 is closed and proper.
LabeledPartialSystem corollary47_build(const TripleSystem& v, const PointSet& v1);

struct Corollary46Result {
  AttachedSystem w_prime;   // W plus gadgets
  PartialTripleSystem combined;  // W' points, then V points
  std::size_t rounds = 0;
};

// Attaches Q_{kn}(x_k) to the k-th point of W (n = |W|, k from 1). Further
// rounds j attach Q_{(jn + k)n}(x_k) until |W'| > |V|.
Corollary46Result corollary46_build(const TripleSystem& v, const TripleSystem& w);

}  // namespace sts
