#include "sts/constructions/rigid.hpp"

#include <stdexcept>
#include <vector>

#include "sts/errors.hpp"

namespace sts {

TripleSystem hill_climb_sts(std::size_t n, std::mt19937_64& rng) {
  if (!is_admissible_order(n)) throw std::invalid_argument("no STS on " + std::to_string(n) + " points");
  // third[a*n + b]: the point completing the triple on {a, b}, or kNoPoint.
  std::vector<Point> third(n * n, kNoPoint);
  std::vector<std::size_t> degree(n, 0);
  const std::size_t full = (n - 1) / 2;
  const std::size_t target = sts_triple_count(n);
  std::size_t count = 0;
  auto link = [&](Point a, Point b, Point c) {
    third[a * n + b] = third[b * n + a] = c;
    third[a * n + c] = third[c * n + a] = b;
    third[b * n + c] = third[c * n + b] = a;
    ++degree[a];
    ++degree[b];
    ++degree[c];
  };
  auto unlink = [&](Point a, Point b, Point c) {
    third[a * n + b] = third[b * n + a] = kNoPoint;
    third[a * n + c] = third[c * n + a] = kNoPoint;
    third[b * n + c] = third[c * n + b] = kNoPoint;
    --degree[a];
    --degree[b];
    --degree[c];
  };
  std::vector<Point> live;
  std::vector<Point> partners;
  while (count < target) {
    live.clear();
    for (Point p = 0; p < n; ++p) {
      if (degree[p] < full) live.push_back(p);
    }
    Point x = live[std::uniform_int_distribution<std::size_t>(0, live.size() - 1)(rng)];
    partners.clear();
    for (Point p = 0; p < n; ++p) {
      if (p != x && third[x * n + p] == kNoPoint) partners.push_back(p);
    }
    std::uniform_int_distribution<std::size_t> pick(0, partners.size() - 1);
    Point y = partners[pick(rng)];
    Point z = y;
    while (z == y) z = partners[pick(rng)];
    Point w = third[y * n + z];
    if (w == kNoPoint) {
      ++count;
    } else {
      unlink(y, z, w);
    }
    link(x, y, z);
  }
  std::vector<Triple> triples;
  triples.reserve(target);
  for (Point a = 0; a < n; ++a) {
    for (Point b = a + 1; b < n; ++b) {
      Point c = third[a * n + b];
      if (c > b) triples.push_back({a, b, c});
    }
  }
  return TripleSystem(n, std::move(triples));
}

RigidSearchResult rigid_sts_search(std::size_t n, std::uint64_t seed, std::size_t max_attempts,
                                   const SearchOptions& options) {
  if (n < 15 || !is_admissible_order(n)) {
    throw std::invalid_argument("rigid search needs an admissible order >= 15, got " + std::to_string(n));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    TripleSystem candidate = hill_climb_sts(n, rng);
    if (automorphism_group(candidate, options).order() == 1) return {std::move(candidate), attempt};
  }
  throw NotFound("no rigid STS(" + std::to_string(n) + ") in " + std::to_string(max_attempts) + " attempts");
}

}  // namespace sts
