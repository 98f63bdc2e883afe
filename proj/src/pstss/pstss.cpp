#include "sts/pstss.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "sts/errors.hpp"
#include "sts/validate.hpp"

namespace sts {

namespace {

// Appends the triples of g to triples, with g's z mapped to anchor and its
// other points numbered from next. Returns the map.
std::vector<Point> place_gadget(const GadgetQ& g, Point anchor, Point next, std::vector<Triple>& triples) {
  std::vector<Point> map(g.system.size());
  for (Point p = 0; p < map.size(); ++p) map[p] = p == g.z ? anchor : next++;
  for (const Triple& t : g.system.triples()) triples.push_back(make_triple(map[t[0]], map[t[1]], map[t[2]]));
  return map;
}

AttachedSystem attach_all(const PartialTripleSystem& v, const std::vector<std::pair<Point, std::size_t>>& plan) {
  if (v.size() == 0) throw std::invalid_argument("attach_gadgets needs at least one point");
  std::vector<Triple> triples = v.triples();
  AttachedSystem out;
  for (Point p = 0; p < v.size(); ++p) {
    out.anchor.push_back(p);
    out.names.push_back("v" + std::to_string(p));
  }
  std::map<Point, int> copies;
  for (auto [anchor, r] : plan) {
    GadgetQ g = build_qr(r);
    Point next = static_cast<Point>(out.anchor.size());
    place_gadget(g, anchor, next, triples);
    int copy = copies[anchor]++;
    for (Point p = 1; p < g.system.size(); ++p) {
      out.anchor.push_back(anchor);
      out.names.push_back("q" + std::to_string(anchor) + (copy ? "." + std::to_string(copy) : "") + "_" +
                          std::to_string(p));
    }
  }
  out.system = PartialTripleSystem(out.anchor.size(), std::move(triples));
  return out;
}

}  // namespace

CyclicPstss cyclic_pstss(std::size_t t) {
  if (t < 3) throw std::invalid_argument("a cyclic PSTS needs at least 3 triples");
  CyclicPstss c;
  c.t = t;
  const std::size_t n = 2 * t;
  for (std::size_t j = 0; j < t; ++j) {
    c.cycle_order.push_back(make_triple(static_cast<Point>(2 * j), static_cast<Point>(2 * j + 1),
                                        static_cast<Point>((2 * j + 2) % n)));
  }
  c.system = PartialTripleSystem(n, c.cycle_order);
  return c;
}

bool is_cyclic(const PartialTripleSystem& ps) {
  const auto& triples = ps.triples();
  const std::size_t t = triples.size();
  if (t < 3 || !validate_pstss(ps).ok()) return false;
  for (Point p = 0; p < ps.size(); ++p) {
    if (ps.degree(p) < 1 || ps.degree(p) > 2) return false;
  }
  std::vector<std::set<std::uint32_t>> adjacent(t);
  for (Point p = 0; p < ps.size(); ++p) {
    const auto& inc = ps.incidence()[p];
    if (inc.size() == 2) {
      adjacent[inc[0]].insert(inc[1]);
      adjacent[inc[1]].insert(inc[0]);
    }
  }
  for (const auto& a : adjacent) {
    if (a.size() != 2) return false;
  }
  // Every vertex has degree 2, so the graph is one cycle iff connected.
  std::vector<bool> seen(t, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    for (auto nb : adjacent[cur]) {
      if (!seen[nb]) {
        seen[nb] = true;
        ++reached;
        stack.push_back(nb);
      }
    }
  }
  return reached == t;
}

GadgetQ build_qr(std::size_t r) {
  if (r < 1) throw std::invalid_argument("gadget parameter must be at least 1");
  GadgetQ g;
  g.n = r;
  const std::size_t size1 = 2 * r + 4, size2 = 2 * r + 6;
  std::vector<Triple> triples;
  g.c1.push_back(0);
  for (std::size_t i = 1; i < size1; ++i) g.c1.push_back(static_cast<Point>(i));
  g.c2.push_back(0);
  for (std::size_t i = 1; i < size2; ++i) g.c2.push_back(static_cast<Point>(size1 - 1 + i));
  for (const auto* cycle : {&g.c1, &g.c2}) {
    const std::size_t n = cycle->size();
    for (std::size_t j = 0; j < n / 2; ++j) {
      triples.push_back(make_triple((*cycle)[2 * j], (*cycle)[2 * j + 1], (*cycle)[(2 * j + 2) % n]));
    }
  }
  g.z = 0;
  g.z1 = g.c1[1];
  g.z1_prime = g.c1[2];
  g.z2 = g.c2[1];
  g.z2_prime = g.c2[2];
  g.z_prime = static_cast<Point>(size1 + size2 - 1);
  triples.push_back(make_triple(g.z1_prime, g.z_prime, g.z2_prime));
  g.system = PartialTripleSystem(size1 + size2, std::move(triples));
  return g;
}

GadgetQ build_q(std::size_t n) { return build_qr(n); }

AttachedSystem attach_gadgets(const PartialTripleSystem& v) {
  return attach_gadgets(v, std::vector<std::size_t>(v.size(), v.size()));
}

AttachedSystem attach_gadgets(const PartialTripleSystem& v, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != v.size()) throw std::invalid_argument("one gadget size per point is required");
  std::vector<std::pair<Point, std::size_t>> plan;
  for (Point p = 0; p < v.size(); ++p) plan.emplace_back(p, sizes[p]);
  return attach_all(v, plan);
}

BooleanSpace::BooleanSpace(unsigned n_prime, unsigned cap) : n_prime_(n_prime) {
  if (n_prime == 0) throw std::invalid_argument("the ground set must be nonempty");
  if (n_prime > cap) {
    throw Unsupported("ground size " + std::to_string(n_prime) + " exceeds the cap " + std::to_string(cap));
  }
}

TripleSystem BooleanSpace::to_system() const {
  const std::uint64_t top = std::uint64_t{1} << n_prime_;
  std::vector<Triple> triples;
  triples.reserve(sts_triple_count(size()));
  for (std::uint64_t a = 1; a < top; ++a) {
    for (std::uint64_t b = a + 1; b < top; ++b) {
      std::uint64_t c = a ^ b;
      if (c > b) triples.push_back({point_of(a), point_of(b), point_of(c)});
    }
  }
  return TripleSystem(size(), std::move(triples));
}

BooleanSpace boolean_space(unsigned n_prime, unsigned cap) { return BooleanSpace(n_prime, cap); }

Replacement replacement_for(const Triple& vt) {
  const Point a = BooleanSpace::singleton(vt[0]), b = BooleanSpace::singleton(vt[1]),
              c = BooleanSpace::singleton(vt[2]);
  const Point ab = BooleanSpace::line_third(a, b), ac = BooleanSpace::line_third(a, c),
              bc = BooleanSpace::line_third(b, c);
  return {{make_triple(ab, ac, bc), make_triple(a, b, ab), make_triple(a, c, ac), make_triple(b, c, bc)},
          {make_triple(a, b, c), make_triple(a, ab, ac), make_triple(b, ab, bc), make_triple(c, ac, bc)}};
}

TripleSystem replace_triples(const BooleanSpace& p, const PartialTripleSystem& vprime) {
  if (vprime.size() > p.ground_size()) {
    throw std::invalid_argument("V' has " + std::to_string(vprime.size()) + " points but the ground set has " +
                                std::to_string(p.ground_size()));
  }
  auto report = validate_pstss(vprime);
  if (!report.ok()) throw std::invalid_argument("V' is not a partial triple system: " + report.summary());
  std::set<Triple> removed;
  std::vector<Triple> added;
  for (const Triple& t : vprime.triples()) {
    Replacement r = replacement_for(t);
    removed.insert(r.removed.begin(), r.removed.end());
    added.insert(added.end(), r.added.begin(), r.added.end());
  }
  TripleSystem base = p.to_system();
  std::vector<Triple> triples;
  triples.reserve(base.triples().size());
  for (const Triple& t : base.triples()) {
    if (!removed.count(t)) triples.push_back(t);
  }
  triples.insert(triples.end(), added.begin(), added.end());
  base = TripleSystem();
  return TripleSystem(p.size(), std::move(triples));
}

std::vector<Point> witness_set(const PartialTripleSystem& u, Point p, Point x, Point y) {
  const JoinTable& j = u.joins();
  Point x1 = j.third(p, x), y1 = j.third(p, y);
  if (x1 == kNoPoint || y1 == kNoPoint) return {};
  Point z = j.third(x1, y1);
  if (z == kNoPoint) return {};
  Point q = j.third(p, z);
  if (q == kNoPoint) return {};
  std::vector<Point> set{p, x, y, x1, y1, z, q};
  std::vector<Point> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return set;
}

bool witness_closed(const PartialTripleSystem& u, const std::vector<Point>& set, Point x, Point y, Point z) {
  const JoinTable& j = u.joins();
  auto special = [&](Point a) { return a == x || a == y || a == z; };
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t k = i + 1; k < set.size(); ++k) {
      Point c = j.third(set[i], set[k]);
      if (c == kNoPoint) return false;
      if (special(set[i]) + special(set[k]) + special(c) >= 2) continue;
      if (std::find(set.begin(), set.end(), c) == set.end()) return false;
    }
  }
  return true;
}

Triple reconstruct_line(const PartialTripleSystem& u, Point x, Point y, const ReconstructOptions& options) {
  if (x == y || x >= u.size() || y >= u.size()) throw std::invalid_argument("x and y must be distinct points");
  if (u.size() < 8) throw std::invalid_argument("reconstruction needs more than 7 points");
  std::mt19937_64 rng(options.seed ^ (static_cast<std::uint64_t>(x) << 32) ^ y);
  std::uniform_int_distribution<Point> pick(0, static_cast<Point>(u.size() - 1));
  std::map<Point, std::size_t> votes;
  std::size_t valid = 0;
  for (std::size_t s = 0; s < options.samples; ++s) {
    Point p = pick(rng);
    if (p == x || p == y) continue;
    auto set = witness_set(u, p, x, y);
    if (set.empty()) continue;
    Point z = set[5];
    if (!witness_closed(u, set, x, y, z)) continue;
    ++votes[z];
    ++valid;
  }
  if (valid < options.min_valid) {
    throw NotFound("only " + std::to_string(valid) + " of " + std::to_string(options.samples) +
                   " samples gave a closed witness set; raise the sample count");
  }
  auto best = std::max_element(votes.begin(), votes.end(),
                               [](const auto& a, const auto& b) { return a.second < b.second; });
  return make_triple(x, y, best->first);
}

namespace {

std::vector<std::uint32_t> off_line_degrees(const PartialTripleSystem& u) {
  std::vector<std::uint32_t> deg(u.size(), 0);
  for (const Triple& t : u.triples()) {
    if (!BooleanSpace::is_line(t[0], t[1], t[2])) {
      for (Point p : t) ++deg[p];
    }
  }
  return deg;
}

}  // namespace

PointSet recover_vprime(const PartialTripleSystem& u, const BooleanSpace& p) {
  if (u.size() != p.size()) throw std::invalid_argument("U and P must have the same points");
  std::vector<std::uint32_t> deg = off_line_degrees(u);
  PointSet out(u.size());
  for (Point x = 0; x < u.size(); ++x) {
    if (deg[x] > 2) out.insert(x);
  }
  PointSet first_kind = out;
  for (const Triple& t : u.triples()) {
    if (BooleanSpace::is_line(t[0], t[1], t[2])) continue;
    for (int i = 0; i < 3; ++i) {
      Point x = t[i], o1 = t[(i + 1) % 3], o2 = t[(i + 2) % 3];
      if (deg[x] == 2 && first_kind.contains(o1) && first_kind.contains(o2)) out.insert(x);
    }
  }
  return out;
}

std::vector<Point> pair_points_off_by_degree(const PartialTripleSystem& u, const BooleanSpace& p,
                                             const PartialTripleSystem& vprime) {
  if (u.size() != p.size()) throw std::invalid_argument("U and P must have the same points");
  std::vector<std::uint32_t> deg = off_line_degrees(u);
  std::vector<Point> bad;
  for (const Triple& t : vprime.triples()) {
    Replacement r = replacement_for(t);
    const Triple& pairs = r.removed[0];
    for (Point q : pairs) {
      if (deg[q] != 2) bad.push_back(q);
    }
  }
  return bad;
}

Theorem13Result theorem13_build(const PartialTripleSystem& v, unsigned cap) {
  AttachedSystem vprime = attach_gadgets(v);
  BooleanSpace space(static_cast<unsigned>(vprime.system.size()), cap);
  TripleSystem system = replace_triples(space, vprime.system);
  return {std::move(vprime), space, std::move(system)};
}

LabeledPartialSystem corollary47_build(const TripleSystem& v, const PointSet& v1) {
  if (v1.universe() != v.size()) throw std::invalid_argument("V1 must be a subset of the points of V");
  if (!is_closed(v, v1)) throw std::invalid_argument("V1 is not a subsystem of V");
  if (v1.size() == v.size()) throw std::invalid_argument("V1 must be a proper subsystem");
  const auto members = v1.points();
  const Point z = static_cast<Point>(v.size() + members.size());
  std::vector<Triple> triples = v.triples();
  LabeledPartialSystem out;
  for (Point p = 0; p < v.size(); ++p) out.names.push_back(std::to_string(p));
  for (std::size_t i = 0; i < members.size(); ++i) {
    Point prime = static_cast<Point>(v.size() + i);
    triples.push_back(make_triple(members[i], prime, z));
    out.names.push_back(std::to_string(members[i]) + "'");
  }
  out.names.push_back("z");
  out.system = PartialTripleSystem(z + 1, std::move(triples));
  return out;
}

Corollary46Result corollary46_build(const TripleSystem& v, const TripleSystem& w) {
  const std::size_t n = w.size();
  if (n == 0) throw std::invalid_argument("W must have at least one point");
  std::vector<std::pair<Point, std::size_t>> plan;
  Corollary46Result out;
  std::size_t total = n;
  do {
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t r = (out.rounds * n + k) * n;
      plan.emplace_back(static_cast<Point>(k - 1), r);
      total += 4 * r + 9;
    }
    ++out.rounds;
  } while (total <= v.size());
  out.w_prime = attach_all(w, plan);
  std::vector<Triple> triples = out.w_prime.system.triples();
  const Point shift = static_cast<Point>(out.w_prime.system.size());
  for (const Triple& t : v.triples()) triples.push_back({t[0] + shift, t[1] + shift, t[2] + shift});
  out.combined = PartialTripleSystem(shift + v.size(), std::move(triples));
  return out;
}

}  // namespace sts
