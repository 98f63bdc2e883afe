#include "sts/subsystems.hpp"

#include <algorithm>
#include <set>

namespace sts {

std::optional<FanoPoints> fano_generated_by(const PartialTripleSystem& ts, Point a, Point b,
                                            Point c) {
  const JoinTable& join = ts.joins();
  Point ab = join.third(a, b);
  if (ab == kNoPoint || c == a || c == b || c == ab) return std::nullopt;
  FanoPoints pts{a, b, ab, c, join.third(a, c), join.third(b, c), join.third(ab, c)};
  for (Point p : pts) {
    if (p == kNoPoint) return std::nullopt;
  }
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) return std::nullopt;
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      Point t = join.third(pts[i], pts[j]);
      if (t == kNoPoint || !std::binary_search(pts.begin(), pts.end(), t)) return std::nullopt;
    }
  }
  return pts;
}

bool is_projective(const PartialTripleSystem& ts) {
  const auto& triples = ts.triples();
  if (ts.size() < 7) {
    return ts.size() == 1 || (ts.size() == 3 && triples.size() == 1);
  }
  for (Point p = 0; p < ts.size(); ++p) {
    const auto& through = ts.incidence()[p];
    if (through.empty()) return false;
    for (std::size_t i = 0; i < through.size(); ++i) {
      const Triple& t1 = triples[through[i]];
      Point a = t1[0] == p ? t1[1] : t1[0];
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const Triple& t2 = triples[through[j]];
        Point b = t2[0] == p ? t2[1] : t2[0];
        if (!fano_generated_by(ts, p, a, b)) return false;
      }
    }
  }
  return true;
}

std::vector<FanoPoints> enumerate_fano(const PartialTripleSystem& ts) {
  // Every Fano is generated by two of its lines through any of its points,
  // so scanning line pairs through each point finds all of them.
  const auto& triples = ts.triples();
  std::set<FanoPoints> found;
  for (Point p = 0; p < ts.size(); ++p) {
    const auto& through = ts.incidence()[p];
    for (std::size_t i = 0; i < through.size(); ++i) {
      const Triple& t1 = triples[through[i]];
      Point a = t1[0] == p ? t1[1] : t1[0];
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const Triple& t2 = triples[through[j]];
        Point b = t2[0] == p ? t2[1] : t2[0];
        // Only generate from the smallest point of each plane.
        if (auto f = fano_generated_by(ts, p, a, b); f && (*f)[0] == p) found.insert(*f);
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace sts
