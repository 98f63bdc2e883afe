#pragma once

// Hand-built systems and brute-force oracles shared by the unit tests.
// Nothing here goes through the constructions module.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "sts/permutation.hpp"
#include "sts/triple_system.hpp"

namespace fixtures {

using sts::Point;
using sts::Triple;
using sts::TripleSystem;

inline TripleSystem fano() {
  return TripleSystem(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Lines of AG(2,3) on points 3x+y.
inline TripleSystem ag23() {
  std::vector<Triple> triples;
  for (int a = 0; a < 9; ++a) {
    for (int b = a + 1; b < 9; ++b) {
      int ax = a / 3, ay = a % 3, bx = b / 3, by = b % 3;
      int cx = (6 - ax - bx) % 3, cy = (6 - ay - by) % 3;
      int c = 3 * cx + cy;
      if (c > b) triples.push_back({Point(a), Point(b), Point(c)});
    }
  }
  return TripleSystem(9, triples);
}

// Nonzero vectors of GF(2)^(d+1), point v-1.
inline TripleSystem projective(int d) {
  int n = (1 << (d + 1)) - 1;
  std::vector<Triple> triples;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      int z = x ^ y;
      if (z > y) triples.push_back({Point(x - 1), Point(y - 1), Point(z - 1)});
    }
  }
  return TripleSystem(n, triples);
}

// Cyclic STS(13) from base blocks {0,1,4}, {0,2,7}.
inline TripleSystem cyclic13() {
  std::vector<Triple> triples;
  for (int i = 0; i < 13; ++i) {
    triples.push_back(sts::make_triple((0 + i) % 13, (1 + i) % 13, (4 + i) % 13));
    triples.push_back(sts::make_triple((0 + i) % 13, (2 + i) % 13, (7 + i) % 13));
  }
  return TripleSystem(13, triples);
}

// Finds the first Pasch configuration abc, ade, bdf, cef and replaces it
// by abd, ace, bcf, def, which covers the same twelve pairs.
inline TripleSystem pasch_switch(const TripleSystem& ts) {
  const auto& join = ts.joins();
  const Point n = static_cast<Point>(ts.size());
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      Point c = join.third(a, b);
      for (Point d = 0; d < n; ++d) {
        if (d == a || d == b || d == c) continue;
        Point e = join.third(a, d), f = join.third(b, d);
        if (join.third(c, e) != f) continue;
        const Triple old[4] = {sts::make_triple(a, b, c), sts::make_triple(a, d, e),
                               sts::make_triple(b, d, f), sts::make_triple(c, e, f)};
        std::vector<Triple> out;
        for (const Triple& t : ts.triples()) {
          if (std::find(std::begin(old), std::end(old), t) == std::end(old)) out.push_back(t);
        }
        out.push_back(sts::make_triple(a, b, d));
        out.push_back(sts::make_triple(a, c, e));
        out.push_back(sts::make_triple(b, c, f));
        out.push_back(sts::make_triple(d, e, f));
        return TripleSystem(ts.size(), out);
      }
    }
  }
  return ts;
}

inline std::vector<Point> random_relabeling(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> image(n);
  std::iota(image.begin(), image.end(), Point{0});
  std::shuffle(image.begin(), image.end(), rng);
  return image;
}

// Counts automorphisms by scanning all n! permutations.
inline long long brute_force_aut_order(const TripleSystem& ts) {
  std::vector<Point> perm(ts.size());
  std::iota(perm.begin(), perm.end(), Point{0});
  long long count = 0;
  do {
    if (sts::is_automorphism(ts, sts::Permutation(perm))) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Pair -> third point, built with a std::map rather than the library's
// join table.
inline std::map<std::pair<Point, Point>, Point> third_points(const std::vector<Triple>& triples) {
  std::map<std::pair<Point, Point>, Point> out;
  for (const Triple& t : triples) {
    for (int i = 0; i < 3; ++i) {
      Point a = t[i], b = t[(i + 1) % 3], c = t[(i + 2) % 3];
      out[{std::min(a, b), std::max(a, b)}] = c;
    }
  }
  return out;
}

// Every pair of 0..n-1 in exactly one triple, counted directly.
inline bool covers_pairs_once(std::size_t n, const std::vector<Triple>& triples) {
  std::map<std::pair<Point, Point>, int> count;
  for (const Triple& t : triples) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) ++count[{std::min(t[i], t[j]), std::max(t[i], t[j])}];
    }
  }
  if (count.size() != n * (n - 1) / 2) return false;
  return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; });
}

// All 7-point subsets closed under joins, by scanning every C(n,7) subset.
inline std::vector<std::array<Point, 7>> brute_force_closed_7sets(const TripleSystem& ts) {
  const auto third = third_points(ts.triples());
  const std::size_t n = ts.size();
  std::vector<std::array<Point, 7>> out;
  if (n < 7) return out;
  std::array<Point, 7> idx{};
  std::iota(idx.begin(), idx.end(), Point{0});
  while (true) {
    bool closed = true;
    for (int i = 0; i < 7 && closed; ++i) {
      for (int j = i + 1; j < 7 && closed; ++j) {
        auto it = third.find({idx[i], idx[j]});
        closed = it != third.end() && std::binary_search(idx.begin(), idx.end(), it->second);
      }
    }
    if (closed) out.push_back(idx);
    int i = 6;
    while (i >= 0 && idx[i] == n - 7 + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < 7; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace fixtures
