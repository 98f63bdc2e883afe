#include "sts/constructions/moore.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "sts/errors.hpp"

namespace sts {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

std::vector<std::size_t> units(std::size_t m) {
  std::vector<std::size_t> out;
  if (m == 1) return {0};
  for (std::size_t a = 1; a < m; ++a) {
    if (std::gcd(a, m) == 1) out.push_back(a);
  }
  return out;
}

// Residues the anchor triples use besides the generator, grouped by
// triple, or nullopt when they collide.
std::optional<std::vector<std::array<std::size_t, 2>>> anchor_residues(std::size_t m, std::size_t g,
                                                                       bool with_omega) {
  if (m % 2 != 0) return std::nullopt;
  std::vector<std::array<std::size_t, 2>> groups{{0, m / 2}};
  if (with_omega) {
    const std::size_t w = m / 3;
    groups.push_back({w, (w + m / 2) % m});
    groups.push_back({2 * w, (2 * w + m / 2) % m});
  }
  std::vector<std::size_t> all{g};
  for (const auto& grp : groups) all.insert(all.end(), grp.begin(), grp.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return std::nullopt;
  return groups;
}

// Triples of y through p lying entirely outside x, in triple order.
std::vector<Triple> triples_outside(const TripleSystem& y, const PointSet& x, Point p) {
  std::vector<Triple> out;
  for (auto idx : y.incidence()[p]) {
    const Triple& t = y.triples()[idx];
    if (!x.contains(t[0]) && !x.contains(t[1]) && !x.contains(t[2])) out.push_back(t);
  }
  return out;
}

bool is_triple(const TripleSystem& y, Point a, Point b, Point c) { return y.joins().third(a, b) == c; }

}  // namespace

std::vector<std::size_t> CyclicLabeling::a6() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < m; ++a) {
    if (in_a6(a)) out.push_back(a);
  }
  return out;
}

bool generator_is_rigid(std::size_t m, std::size_t g) {
  for (std::size_t u : units(m)) {
    if (u == 1 % m) continue;
    if (6 * ((u + m - 1) % m) % m * g % m == 0) return false;
  }
  return true;
}

CyclicLabeling label_per_p7(const TripleSystem& y, const PointSet& x, LabelingMode mode) {
  if (x.universe() != y.size()) throw std::invalid_argument("X must be a subset of Y's points");
  if (!is_closed(y, x)) throw std::invalid_argument("X is not a subsystem of Y");
  const std::size_t m = y.size() - x.size();
  if (m == 0) throw std::invalid_argument("Y - X is empty");
  const bool strict = mode == LabelingMode::strict;

  CyclicLabeling lab;
  lab.m = m;
  const auto candidates = units(m);
  auto rigid = std::find_if(candidates.begin(), candidates.end(),
                            [m](std::size_t g) { return generator_is_rigid(m, g); });
  if (rigid != candidates.end()) {
    lab.generator = *rigid;
    lab.rigid_generator = true;
  } else if (strict) {
    throw NotFound("no generator of Z_" + str(m) + " avoids its A6-coset under every nontrivial automorphism");
  } else {
    auto outside = std::find_if(candidates.begin(), candidates.end(), [&](std::size_t g) { return 6 * g % m != 0; });
    lab.generator = outside != candidates.end() ? *outside : candidates.front();
  }

  std::vector<Point> complement;
  for (Point p = 0; p < y.size(); ++p) {
    if (!x.contains(p)) complement.push_back(p);
  }

  // Try the full anchor set first, then the single anchor triple.
  const bool want_omega = m % 3 == 0;
  std::optional<Point> anchor_point;
  std::vector<Triple> anchor_lines;
  std::vector<std::array<std::size_t, 2>> groups;
  for (bool with_omega : {want_omega, false}) {
    auto g = anchor_residues(m, lab.generator, with_omega);
    if (!g) continue;
    for (Point p : complement) {
      auto lines = triples_outside(y, x, p);
      if (lines.size() >= g->size()) {
        anchor_point = p;
        lines.resize(g->size());
        anchor_lines = std::move(lines);
        groups = std::move(*g);
        break;
      }
    }
    if (anchor_point) break;
  }
  if (anchor_point) {
    lab.anchor_triple = true;
    lab.omega_triples = want_omega && groups.size() == 3;
  }
  if (strict && (!lab.anchor_triple || (want_omega && !lab.omega_triples))) {
    throw NotFound("Y - X has no point with " + str(want_omega ? 3 : 1) +
                   " triples inside Y - X for the anchor residues");
  }

  lab.point_of.assign(m, kNoPoint);
  lab.residue_of.assign(y.size(), kNoPoint);
  auto assign = [&](std::size_t residue, Point p) {
    lab.point_of[residue] = p;
    lab.residue_of[p] = static_cast<Point>(residue);
  };
  if (anchor_point) {
    assign(lab.generator, *anchor_point);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      std::vector<Point> others;
      for (Point q : anchor_lines[i]) {
        if (q != *anchor_point) others.push_back(q);
      }
      assign(groups[i][0], others[0]);
      assign(groups[i][1], others[1]);
    }
  }
  std::size_t next = 0;
  for (Point p : complement) {
    if (lab.residue_of[p] != kNoPoint) continue;
    while (lab.point_of[next] != kNoPoint) ++next;
    assign(next, p);
  }
  return lab;
}

std::vector<std::string> check_labeling(const TripleSystem& y, const PointSet& x,
                                        const CyclicLabeling& lab) {
  std::vector<std::string> issues;
  const std::size_t m = y.size() - x.size();
  if (lab.m != m) issues.push_back("m = " + str(lab.m) + " but |Y| - |X| = " + str(m));
  if (lab.point_of.size() != lab.m || lab.residue_of.size() != y.size()) {
    issues.push_back("table sizes do not match");
    return issues;
  }
  for (std::size_t a = 0; a < lab.m; ++a) {
    Point p = lab.point_of[a];
    if (p >= y.size() || x.contains(p) || lab.residue_of[p] != a) {
      issues.push_back("residue " + str(a) + " is not mapped bijectively onto Y - X");
    }
  }
  for (Point p = 0; p < y.size(); ++p) {
    if (x.contains(p) != (lab.residue_of[p] == kNoPoint)) issues.push_back("point " + str(p) + " mislabeled");
  }
  if (!issues.empty()) return issues;
  if (std::gcd(lab.generator, lab.m) != 1) issues.push_back("generator " + str(lab.generator) + " is not a unit");
  if (lab.rigid_generator && !generator_is_rigid(lab.m, lab.generator)) {
    issues.push_back("generator flagged rigid but is not");
  }
  auto triple_of = [&](std::size_t a, std::size_t b) {
    return is_triple(y, lab.point_of[a], lab.point_of[b], lab.point_of[lab.generator]);
  };
  if (lab.anchor_triple && !triple_of(0, lab.m / 2)) issues.push_back("{0, m/2, generator} is not a triple");
  if (lab.omega_triples) {
    const std::size_t w = lab.m / 3;
    if (lab.m % 3 != 0 || !triple_of(w, lab.opposite(w)) || !triple_of(2 * w, lab.opposite(2 * w))) {
      issues.push_back("omega triples through the generator are missing");
    }
  }
  return issues;
}

void validate_moore_input(const MooreInput& in) {
  if (in.x.universe() != in.y.size()) throw std::invalid_argument("X must be a subset of Y's points");
  if (!is_closed(in.y, in.x)) throw std::invalid_argument("X is not a subsystem of Y");
  auto issues = check_labeling(in.y, in.x, in.labeling);
  if (!issues.empty()) throw std::invalid_argument("bad labeling: " + issues.front());
}

MooreLayout::MooreLayout(const PointSet& x, std::size_t v_size, std::size_t m)
    : x_points_(x.points()), x_index_(x.universe(), kNoPoint), v_size_(v_size), m_(m) {
  for (std::size_t i = 0; i < x_points_.size(); ++i) x_index_[x_points_[i]] = static_cast<Point>(i);
}

Point MooreLayout::of_x(Point y_point) const {
  Point u = x_index_.at(y_point);
  if (u == kNoPoint) throw std::out_of_range("point " + str(y_point) + " is not in X");
  return u;
}

std::pair<Point, std::size_t> MooreLayout::pair_of(Point u) const {
  if (u < x_points_.size() || u >= size()) throw std::out_of_range("point " + str(u) + " is not a pair");
  std::size_t off = u - x_points_.size();
  return {static_cast<Point>(off / m_), off % m_};
}

std::vector<std::string> MooreProduct::names() const {
  std::vector<std::string> out(layout.size());
  for (Point u = 0; u < out.size(); ++u) {
    if (layout.is_x(u)) {
      out[u] = "x" + str(layout.y_point_of(u));
    } else {
      auto [v, a] = layout.pair_of(u);
      out[u] = "(" + str(v) + "," + str(a) + ")";
    }
  }
  return out;
}

namespace {

MooreProduct build(const MooreInput& in, const Permutation* sigma) {
  validate_moore_input(in);
  const CyclicLabeling& lab = in.labeling;
  const std::size_t m = lab.m;
  const std::size_t nv = in.v.size();
  MooreLayout layout(in.x, nv, m);
  auto image = [&](Point y_point, Point v) {
    Point r = lab.residue_of[y_point];
    return r == kNoPoint ? layout.of_x(y_point) : layout.of_pair(v, r);
  };

  std::vector<Triple> triples;
  for (const Triple& t : in.y.triples()) {
    bool inside_x = in.x.contains(t[0]) && in.x.contains(t[1]) && in.x.contains(t[2]);
    if (inside_x) {
      triples.push_back(make_triple(layout.of_x(t[0]), layout.of_x(t[1]), layout.of_x(t[2])));
      continue;
    }
    for (Point v = 0; v < nv; ++v) triples.push_back(make_triple(image(t[0], v), image(t[1], v), image(t[2], v)));
  }
  auto twist = [&](std::size_t a) { return sigma ? (*sigma)(static_cast<Point>(a)) : a; };
  for (const Triple& t : in.v.triples()) {
    for (std::size_t a1 = 0; a1 < m; ++a1) {
      for (std::size_t a2 = 0; a2 < m; ++a2) {
        std::size_t a3 = (2 * m - a1 - a2) % m;
        triples.push_back(make_triple(layout.of_pair(t[0], twist(a1)), layout.of_pair(t[1], twist(a2)),
                                      layout.of_pair(t[2], twist(a3))));
      }
    }
  }
  TripleSystem system(layout.size(), std::move(triples));
  std::optional<Permutation> twist_used;
  if (sigma) twist_used = *sigma;
  return {in, layout, std::move(system), std::move(twist_used)};
}

}  // namespace

MooreProduct moore(const MooreInput& input) { return build(input, nullptr); }

MooreProduct moore_variant_sigma(const MooreInput& input, const Permutation& sigma) {
  const CyclicLabeling& lab = input.labeling;
  if (sigma.degree() != lab.m) throw std::invalid_argument("sigma must act on Z_" + str(lab.m));
  if (sigma(static_cast<Point>(lab.generator)) != lab.generator) {
    throw std::invalid_argument("sigma moves the generator " + str(lab.generator));
  }
  for (std::size_t a : lab.a6()) {
    if (sigma(static_cast<Point>(a)) != a) throw std::invalid_argument("sigma moves " + str(a) + " in A6");
  }
  return build(input, &sigma);
}

Permutation lift_automorphism(const MooreLayout& layout, const Permutation& g) {
  if (g.degree() != layout.v_size()) throw std::invalid_argument("permutation degree differs from |V|");
  std::vector<Point> image(layout.size());
  for (Point u = 0; u < image.size(); ++u) {
    if (layout.is_x(u)) {
      image[u] = u;
    } else {
      auto [v, a] = layout.pair_of(u);
      image[u] = layout.of_pair(g(v), a);
    }
  }
  return Permutation(std::move(image));
}

}  // namespace sts
