#include "sts/constructions/embed.hpp"

#include <optional>
#include <stdexcept>

#include "sts/errors.hpp"
#include "sts/validate.hpp"

namespace sts {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

class Completion {
 public:
  Completion(std::size_t n, std::uint64_t budget) : n_(n), budget_(budget), covered_(n * n, 0), open_(n, n - 1) {}

  void place(Point a, Point b, Point c) { mark(a, b, c, 1); }

  bool solve() {
    if (++nodes_ > budget_) throw BudgetExceeded("completion passed " + str(budget_) + " nodes");
    // Point with the fewest open pairs, then its partner with the fewest
    // candidate thirds.
    Point a = kNoPoint;
    for (Point p = 0; p < n_; ++p) {
      if (open_[p] > 0 && (a == kNoPoint || open_[p] < open_[a])) a = p;
    }
    if (a == kNoPoint) return true;
    if (open_[a] % 2 != 0) return false;
    Point best_b = kNoPoint;
    std::size_t best_count = n_ + 1;
    for (Point b = 0; b < n_; ++b) {
      if (b == a || is_covered(a, b)) continue;
      std::size_t count = 0;
      for (Point c = 0; c < n_; ++c) count += free_third(a, b, c);
      if (count < best_count) {
        best_count = count;
        best_b = b;
        if (count == 0) return false;
      }
    }
    for (Point c = 0; c < n_; ++c) {
      if (!free_third(a, best_b, c)) continue;
      mark(a, best_b, c, 1);
      triples_.push_back(make_triple(a, best_b, c));
      if (solve()) return true;
      triples_.pop_back();
      mark(a, best_b, c, 0);
    }
    return false;
  }

  const std::vector<Triple>& added() const { return triples_; }

 private:
  bool is_covered(Point a, Point b) const { return covered_[a * n_ + b] != 0; }
  bool free_third(Point a, Point b, Point c) const {
    return c != a && c != b && !is_covered(a, c) && !is_covered(b, c);
  }
  void set(Point a, Point b, char v) {
    covered_[a * n_ + b] = covered_[b * n_ + a] = v;
    if (v) {
      --open_[a];
      --open_[b];
    } else {
      ++open_[a];
      ++open_[b];
    }
  }
  void mark(Point a, Point b, Point c, char v) {
    set(a, b, v);
    set(a, c, v);
    set(b, c, v);
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> covered_;
  std::vector<std::size_t> open_;
  std::vector<Triple> triples_;
};

PointSet first_points(std::size_t universe, std::size_t count) {
  PointSet s(universe);
  for (Point p = 0; p < count; ++p) s.insert(p);
  return s;
}

std::optional<Embedding> by_doubling(std::size_t x, std::size_t y0) {
  if (x < 3) return std::nullopt;
  std::size_t size = x;
  LabeledSystem sys = steiner_system(x);
  while (size < y0) {
    sys = doubling(sys, "*" + str(size));
    size = 2 * size + 1;
  }
  if (size != y0) return std::nullopt;
  return Embedding{std::move(sys), first_points(y0, x), "doubling"};
}

std::optional<Embedding> by_product(std::size_t x, std::size_t y0) {
  if (x < 3 || y0 % x != 0 || !is_admissible_order(y0 / x) || y0 / x < 3) return std::nullopt;
  const std::size_t k = y0 / x;
  LabeledSystem sys = direct_product(steiner_system(x), steiner_system(k));
  PointSet sub(y0);
  for (Point a = 0; a < x; ++a) sub.insert(static_cast<Point>(a * k));
  return Embedding{std::move(sys), std::move(sub), "product"};
}

std::vector<std::size_t> reachable_without_search(std::size_t x, std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t y0 = 2 * x + 1; y0 <= limit; ++y0) {
    if (!is_admissible_order(y0)) continue;
    if (x <= 1 || x == 3 || by_doubling(x, y0) || by_product(x, y0)) out.push_back(y0);
  }
  return out;
}

}  // namespace

TripleSystem complete_sts(std::size_t n, std::vector<Triple> fixed, std::uint64_t node_budget) {
  if (!is_admissible_order(n)) throw std::invalid_argument("no STS on " + str(n) + " points");
  PartialTripleSystem partial(n, fixed);
  if (!validate_pstss(partial).ok()) throw std::invalid_argument("fixed triples repeat a pair");
  Completion search(n, node_budget);
  for (const Triple& t : partial.triples()) search.place(t[0], t[1], t[2]);
  if (!search.solve()) throw NotFound("the partial system has no completion on " + str(n) + " points");
  fixed.insert(fixed.end(), search.added().begin(), search.added().end());
  return TripleSystem(n, std::move(fixed));
}

Embedding embed_subsystem(std::size_t x, std::size_t y0, std::uint64_t completion_budget) {
  if (!is_admissible_order(x) || !is_admissible_order(y0) || y0 == 0) {
    throw std::invalid_argument("sizes " + str(x) + ", " + str(y0) + " are not both admissible");
  }
  if (y0 < 2 * x + 1) throw std::invalid_argument("need y0 >= 2x + 1, got x = " + str(x) + ", y0 = " + str(y0));

  if (x <= 1) return {steiner_system(y0), first_points(y0, x), "base"};
  if (x == 3) {
    LabeledSystem sys = steiner_system(y0);
    const Triple t = sys.system.triples().front();
    PointSet sub(y0, t);
    return {std::move(sys), std::move(sub), "triple"};
  }
  if (auto e = by_doubling(x, y0)) return *e;
  if (auto e = by_product(x, y0)) return *e;

  const TripleSystem base = steiner_system(x).system;
  try {
    TripleSystem sys = complete_sts(y0, base.triples(), completion_budget);
    return {with_index_names(std::move(sys)), first_points(y0, x), "completion"};
  } catch (const BudgetExceeded&) {
    std::string sizes;
    for (std::size_t s : reachable_without_search(x, 8 * x + 7)) sizes += (sizes.empty() ? "" : ", ") + str(s);
    throw Unsupported("unsupported pair (" + str(x) + ", " + str(y0) + "); orders reachable for x = " + str(x) +
                      " up to " + str(8 * x + 7) + ": " + sizes);
  }
}

}  // namespace sts
