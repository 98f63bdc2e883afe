#include "sts/constructions/paired.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sts/constructions/pointed.hpp"
#include "sts/errors.hpp"

namespace sts {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

// A copy of s on local labels: 0 is inf, 1 + j is (1, B[j]) and
// 1 + k + j is (2, B[j]).
using LocalCopy = std::vector<Triple>;

// The copy sending p to inf and the i-th triple through p to the pair of
// block position order[i], flipped when bit i of flips is set.
LocalCopy copy_at(const TripleSystem& s, Point p, const std::vector<std::size_t>& order, std::uint64_t flips) {
  const std::size_t k = order.size();
  std::vector<Point> image(s.size(), kNoPoint);
  image[p] = 0;
  const auto& through = s.incidence()[p];
  for (std::size_t i = 0; i < k; ++i) {
    const Triple& t = s.triples()[through[i]];
    Point a = t[0] == p ? t[1] : t[0];
    Point b = t[2] == p ? t[1] : t[2];
    if (flips >> i & 1) std::swap(a, b);
    image[a] = static_cast<Point>(1 + order[i]);
    image[b] = static_cast<Point>(1 + k + order[i]);
  }
  LocalCopy out;
  out.reserve(s.triples().size());
  for (const Triple& t : s.triples()) out.push_back(make_triple(image[t[0]], image[t[1]], image[t[2]]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LocalCopy> distinct_copies(const TripleSystem& s, std::size_t k, std::uint64_t budget) {
  std::set<LocalCopy> seen;
  std::uint64_t maps = 0;
  for (Point p = 0; p < s.size(); ++p) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    do {
      for (std::uint64_t flips = 0; flips < (std::uint64_t{1} << k); ++flips) {
        if (++maps > budget) throw BudgetExceeded("enumerating copies passed " + str(budget) + " maps");
        seen.insert(copy_at(s, p, order, flips));
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

BlockDesign design_from_sts(const TripleSystem& ts) {
  BlockDesign d;
  d.points = ts.size();
  for (const Triple& t : ts.triples()) d.blocks.push_back({t[0], t[1], t[2]});
  return d;
}

void validate_design(const BlockDesign& d) {
  const std::size_t k = d.block_size();
  if (k < 2) throw std::invalid_argument("design blocks must have at least 2 points");
  std::vector<char> covered(d.points * d.points, 0);
  for (const auto& block : d.blocks) {
    if (block.size() != k) throw std::invalid_argument("design blocks differ in size");
    for (std::size_t i = 0; i < k; ++i) {
      if (block[i] >= d.points) throw std::invalid_argument("design point out of range");
      for (std::size_t j = i + 1; j < k; ++j) {
        Point a = std::min(block[i], block[j]);
        Point b = std::max(block[i], block[j]);
        if (a == b) throw std::invalid_argument("design block repeats a point");
        if (covered[a * d.points + b]++) {
          throw std::invalid_argument("design pair (" + str(a) + "," + str(b) + ") in two blocks");
        }
      }
    }
  }
  for (Point a = 0; a < d.points; ++a) {
    for (Point b = a + 1; b < d.points; ++b) {
      if (!covered[a * d.points + b]) throw std::invalid_argument("design pair (" + str(a) + "," + str(b) + ") in no block");
    }
  }
}

LabeledSystem paired_via_design(const TripleSystem& s, const BlockDesign& w, std::uint64_t node_budget) {
  validate_design(w);
  const std::size_t k = w.block_size();
  if (s.size() != 2 * k + 1) {
    throw std::invalid_argument("s has " + str(s.size()) + " points but blocks need " + str(2 * k + 1));
  }
  const std::size_t n = 2 * w.points + 1;

  std::vector<LocalCopy> copies;
  if (is_pg2_paired(s)) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    copies.push_back(copy_at(s, 0, order, 0));
  } else {
    copies = distinct_copies(s, k, node_budget);
  }

  auto place = [&](const std::vector<Point>& block, const LocalCopy& copy, std::vector<Triple>& out) {
    auto global = [&](Point local) -> Point {
      if (local == 0) return 0;
      std::size_t j = (local - 1) % k;
      std::size_t side = (local - 1) / k;
      return static_cast<Point>(1 + side * w.points + block[j]);
    };
    for (const Triple& t : copy) {
      Triple g = make_triple(global(t[0]), global(t[1]), global(t[2]));
      if (g[0] == 0 && g[2] == g[1] + w.points) continue;  // forced triple, added once below
      out.push_back(g);
    }
  };

  std::vector<Triple> forced;
  for (Point b = 0; b < w.points; ++b) {
    forced.push_back({0, static_cast<Point>(1 + b), static_cast<Point>(1 + w.points + b)});
  }

  std::vector<std::size_t> choice(w.blocks.size(), 0);
  std::uint64_t nodes = 0;
  while (true) {
    if (++nodes > node_budget) throw BudgetExceeded("copy search passed " + str(node_budget) + " nodes");
    std::vector<Triple> triples = forced;
    for (std::size_t i = 0; i < w.blocks.size(); ++i) place(w.blocks[i], copies[choice[i]], triples);
    TripleSystem candidate(n, std::move(triples));
    if (is_pg2_paired(candidate)) {
      std::vector<std::string> names(n);
      names[0] = "inf";
      for (Point b = 0; b < w.points; ++b) {
        names[1 + b] = "(1," + str(b) + ")";
        names[1 + w.points + b] = "(2," + str(b) + ")";
      }
      return {std::move(candidate), std::move(names)};
    }
    // Odometer over the per-block copy choices.
    std::size_t i = w.blocks.size();
    while (i > 0 && ++choice[i - 1] == copies.size()) choice[--i] = 0;
    if (i == 0) break;
  }
  throw NotFound("no choice of " + str(copies.size()) + " copies per block gives a PG(2,2)-paired system");
}

}  // namespace sts
