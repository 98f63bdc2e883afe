#include "sts/constructions/pointed.hpp"

#include <algorithm>
#include <stdexcept>

#include "sts/subsystems.hpp"

namespace sts {

namespace {

PredicateResult failure(std::vector<Point> points, std::string detail) {
  return {false, std::move(points), std::move(detail)};
}

std::string list(const std::vector<Point>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i]);
  return s + "}";
}

}  // namespace

PredicateResult is_pg2_pointed(const TripleSystem& ts, Point p) {
  if (p >= ts.size()) throw std::out_of_range("point out of range");
  const auto& triples = ts.triples();
  const auto& through = ts.incidence()[p];
  for (std::size_t i = 0; i < through.size(); ++i) {
    const Triple& t1 = triples[through[i]];
    Point a = t1[0] == p ? t1[1] : t1[0];
    for (std::size_t j = i + 1; j < through.size(); ++j) {
      const Triple& t2 = triples[through[j]];
      Point b = t2[0] == p ? t2[1] : t2[0];
      if (!fano_generated_by(ts, p, a, b)) {
        return failure({p, a, b}, "triples through " + std::to_string(p) + " via " + std::to_string(a) +
                                      " and " + std::to_string(b) + " do not generate a PG(2,2)");
      }
    }
  }
  return {};
}

PredicateResult is_pg3_2pointed(const TripleSystem& ts, Point p, Point q) {
  if (ts.size() <= 7) throw std::invalid_argument("PG(3,2)-2-pointedness needs more than 7 points");
  if (p >= ts.size() || q >= ts.size() || p == q) throw std::invalid_argument("need two distinct points");
  for (Point r = 0; r < ts.size(); ++r) {
    if (r == p || r == q) continue;
    for (Point s = r + 1; s < ts.size(); ++s) {
      if (s == p || s == q) continue;
      std::vector<Point> seed{p, q, r, s};
      auto closure = span_capped(ts, PointSet(ts.size(), seed), 15);
      if (!closure) return failure(seed, list(seed) + " generates more than 15 points");
      std::size_t size = closure->size();
      if (size == 7) continue;  // every STS(7) is a PG(2,2)
      if (size != 15 || !is_projective(induced_subsystem(ts, *closure).first)) {
        return failure(seed, list(seed) + " generates a " + std::to_string(size) +
                                 "-point subsystem that is not projective");
      }
    }
  }
  return {};
}

PredicateResult is_pg2_paired(const TripleSystem& ts) {
  const JoinTable& join = ts.joins();
  const std::size_t n = ts.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      Point z = join.third(x, y);
      FanoPoints first{};
      int found = 0;
      for (Point s = 0; s < n && found < 2; ++s) {
        if (s == x || s == y || s == z) continue;
        if (found == 1 && std::binary_search(first.begin(), first.end(), s)) continue;
        if (auto f = fano_generated_by(ts, x, y, s)) {
          first = *f;
          ++found;
        }
      }
      if (found < 2) {
        return failure({x, y}, "pair (" + std::to_string(x) + "," + std::to_string(y) + ") lies in " +
                                   std::to_string(found) + " PG(2,2) subsystem(s)");
      }
    }
  }
  return {};
}

}  // namespace sts
