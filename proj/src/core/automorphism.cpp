#include "sts/automorphism.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "sts/errors.hpp"

namespace sts {

SearchOptions search_options_from_env() {
  SearchOptions options;
  if (const char* env = std::getenv("STS_NODE_BUDGET"); env != nullptr && *env != '\0') {
    options.node_budget = std::stoull(env);
  }
  return options;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the running value
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

// Ordered partition of the points. Cells are named by their start position
// in `order`, which depends only on the refinement history, never on labels.
struct Partition {
  std::vector<Point> order;
  std::vector<std::uint32_t> cell_of;  // point -> start of its cell
  std::vector<std::uint32_t> length;   // start -> cell length (valid at starts)
  std::uint32_t cells = 0;

  explicit Partition(std::size_t n) : order(n), cell_of(n, 0), length(n, 0), cells(n ? 1 : 0) {
    std::iota(order.begin(), order.end(), Point{0});
    if (n) length[0] = static_cast<std::uint32_t>(n);
  }

  bool discrete() const { return cells == order.size(); }
};

// One search node: a refined partition plus the invariant trace produced
// while refining it.
struct Node {
  Partition partition;
  std::vector<std::uint64_t> trace;
};

class Engine {
 public:
  Engine(const PartialTripleSystem& ts, const SearchOptions& options)
      : ts_(ts), n_(ts.size()), budget_(options.node_budget) {
    others_.resize(n_);
    for (const Triple& t : ts.triples()) {
      others_[t[0]].push_back({t[1], t[2]});
      others_[t[1]].push_back({t[0], t[2]});
      others_[t[2]].push_back({t[0], t[1]});
    }
  }

  Node root() {
    Node node{Partition(n_), {}};
    refine(node);
    return node;
  }

  Node child(const Node& parent, Point w) {
    Node node{parent.partition, {}};
    individualize(node.partition, w);
    refine(node);
    return node;
  }

  // First smallest non-singleton cell.
  std::uint32_t target_cell(const Partition& p) const {
    std::uint32_t best = 0, best_len = 0;
    for (std::uint32_t s = 0; s < n_; s += p.length[s]) {
      std::uint32_t len = p.length[s];
      if (len > 1 && (best_len == 0 || len < best_len)) {
        best = s;
        best_len = len;
      }
    }
    return best;
  }

  std::vector<Point> cell_points(const Partition& p, std::uint32_t start) const {
    std::vector<Point> pts(p.order.begin() + start, p.order.begin() + start + p.length[start]);
    std::sort(pts.begin(), pts.end());
    return pts;
  }

  const PartialTripleSystem& system() const { return ts_; }
  std::size_t size() const { return n_; }

 private:
  void count_node() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("automorphism search exceeded node budget of " +
                           std::to_string(budget_));
    }
  }

  void individualize(Partition& p, Point w) const {
    std::uint32_t start = p.cell_of[w];
    std::uint32_t len = p.length[start];
    auto it = std::find(p.order.begin() + start, p.order.begin() + start + len, w);
    std::iter_swap(p.order.begin() + start, it);
    std::sort(p.order.begin() + start + 1, p.order.begin() + start + len);
    p.length[start] = 1;
    p.length[start + 1] = len - 1;
    for (std::uint32_t i = start + 1; i < start + len; ++i) p.cell_of[p.order[i]] = start + 1;
    ++p.cells;
  }

  void refine(Node& node) {
    count_node();
    Partition& p = node.partition;
    std::vector<std::vector<std::uint64_t>> sig(n_);
    std::vector<std::uint32_t> idx;
    bool changed = true;
    while (changed && !p.discrete()) {
      changed = false;
      for (Point x = 0; x < n_; ++x) {
        auto& s = sig[x];
        s.clear();
        if (p.length[p.cell_of[x]] == 1) continue;
        for (auto [a, b] : others_[x]) {
          std::uint64_t ca = p.cell_of[a], cb = p.cell_of[b];
          if (ca > cb) std::swap(ca, cb);
          s.push_back((ca << 32) | cb);
        }
        std::sort(s.begin(), s.end());
      }
      std::vector<std::uint32_t> starts;
      for (std::uint32_t s = 0; s < n_; s += p.length[s]) {
        if (p.length[s] > 1) starts.push_back(s);
      }
      for (std::uint32_t start : starts) {
        std::uint32_t len = p.length[start];
        auto first = p.order.begin() + start;
        auto last = first + len;
        std::stable_sort(first, last, [&](Point a, Point b) { return sig[a] < sig[b]; });
        std::uint64_t h = mix(start, len);
        std::uint32_t sub = start;
        std::uint32_t pieces = 0;
        for (std::uint32_t i = start; i <= start + len; ++i) {
          bool boundary = i == start + len || (i > start && sig[p.order[i]] != sig[p.order[i - 1]]);
          if (!boundary) continue;
          p.length[sub] = i - sub;
          for (std::uint32_t k = sub; k < i; ++k) p.cell_of[p.order[k]] = sub;
          h = mix(h, i - sub);
          for (std::uint64_t v : sig[p.order[sub]]) h = mix(h, v);
          ++pieces;
          sub = i;
        }
        if (pieces > 1) {
          p.cells += pieces - 1;
          changed = true;
          node.trace.push_back(h);
        }
      }
    }
    std::uint64_t shape = mix(0, p.cells);
    for (std::uint32_t s = 0; s < n_; s += p.length[s]) shape = mix(shape, p.length[s]);
    node.trace.push_back(shape);
  }

  const PartialTripleSystem& ts_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::pair<Point, Point>>> others_;
};

// Orbit of `p` under `gens`.
std::vector<Point> orbit_of(Point p, const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<Point> out{p};
  std::vector<bool> seen(n, false);
  seen[p] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Point q = g(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  return out;
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(Engine& engine) : engine_(engine) {}

  PermutationGroup run() {
    const std::size_t n = engine_.size();
    path_.push_back(engine_.root());
    while (!path_.back().partition.discrete()) {
      std::uint32_t cell = engine_.target_cell(path_.back().partition);
      std::vector<Point> members = engine_.cell_points(path_.back().partition, cell);
      targets_.push_back(members);
      base_.push_back(members.front());
      path_.push_back(engine_.child(path_.back(), members.front()));
    }
    const std::vector<Point>& leaf = path_.back().partition.order;

    std::vector<Permutation> gens;
    for (std::size_t level = base_.size(); level-- > 0;) {
      std::vector<bool> failed(n, false);
      for (Point w : targets_[level]) {
        auto orbit = orbit_of(base_[level], gens, n);
        if (std::find(orbit.begin(), orbit.end(), w) != orbit.end() || failed[w]) continue;
        Node start = engine_.child(path_[level], w);
        std::optional<Permutation> found;
        if (start.trace == path_[level + 1].trace) found = search(start, level + 1, leaf);
        if (found) {
          gens.push_back(std::move(*found));
        } else {
          for (Point q : orbit_of(w, gens, n)) failed[q] = true;
        }
      }
    }
    return PermutationGroup(n, std::move(gens), base_);
  }

 private:
  // Looks below `node` (at `depth` on the first path's scale) for a leaf
  // whose correspondence with the first leaf is an automorphism.
  std::optional<Permutation> search(const Node& node, std::size_t depth,
                                    const std::vector<Point>& leaf) {
    const Partition& p = node.partition;
    if (p.discrete()) {
      std::vector<Point> image(engine_.size());
      for (std::size_t pos = 0; pos < leaf.size(); ++pos) image[leaf[pos]] = p.order[pos];
      Permutation g(std::move(image));
      if (is_automorphism(engine_.system(), g)) return g;
      return std::nullopt;
    }
    std::uint32_t cell = engine_.target_cell(p);
    for (Point v : engine_.cell_points(p, cell)) {
      Node next = engine_.child(node, v);
      if (next.trace != path_[depth + 1].trace) continue;
      if (auto g = search(next, depth + 1, leaf)) return g;
    }
    return std::nullopt;
  }

  Engine& engine_;
  std::vector<Node> path_;
  std::vector<std::vector<Point>> targets_;
  std::vector<Point> base_;
};

class CanonicalSearch {
 public:
  CanonicalSearch(Engine& engine, const PermutationGroup& group)
      : engine_(engine), group_(group), trivial_(group.order() == 1) {}

  CanonicalForm run() {
    Node root = engine_.root();
    std::vector<std::vector<std::uint64_t>> traces{root.trace};
    std::vector<Point> prefix;
    visit(root, traces, prefix);
    CanonicalForm form;
    form.n = engine_.size();
    form.triples = std::move(best_cert_);
    form.labeling = Permutation(std::move(best_labeling_));
    return form;
  }

 private:
  // -1: path is already below the best key, 0: tied so far, +1: above.
  int compare_prefix(const std::vector<std::vector<std::uint64_t>>& traces) const {
    std::size_t common = std::min(traces.size(), best_traces_.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (traces[i] < best_traces_[i]) return -1;
      if (best_traces_[i] < traces[i]) return 1;
    }
    return 0;
  }

  void visit(const Node& node, std::vector<std::vector<std::uint64_t>>& traces,
             std::vector<Point>& prefix) {
    const Partition& p = node.partition;
    int cmp = have_best_ ? compare_prefix(traces) : -1;
    if (cmp > 0) return;
    if (cmp == 0 && !p.discrete() && traces.size() >= best_traces_.size()) return;

    if (p.discrete()) {
      std::vector<Point> labeling(engine_.size());
      for (std::size_t pos = 0; pos < p.order.size(); ++pos) {
        labeling[p.order[pos]] = static_cast<Point>(pos);
      }
      std::vector<Triple> cert;
      cert.reserve(engine_.system().triples().size());
      for (const Triple& t : engine_.system().triples()) {
        cert.push_back(make_triple(labeling[t[0]], labeling[t[1]], labeling[t[2]]));
      }
      std::sort(cert.begin(), cert.end());
      bool better = !have_best_ || cmp < 0 || traces.size() < best_traces_.size() ||
                    (traces.size() == best_traces_.size() && cert < best_cert_);
      if (better) {
        have_best_ = true;
        best_traces_ = traces;
        best_cert_ = std::move(cert);
        best_labeling_ = std::move(labeling);
      }
      return;
    }

    std::uint32_t cell = engine_.target_cell(p);
    std::vector<Point> members = engine_.cell_points(p, cell);
    std::vector<Permutation> stab;
    if (!trivial_) stab = group_.stabilizer_generators(prefix);
    std::vector<bool> covered(engine_.size(), false);
    for (Point v : members) {
      if (covered[v]) continue;
      for (Point q : orbit_of(v, stab, engine_.size())) covered[q] = true;
      Node next = engine_.child(node, v);
      traces.push_back(next.trace);
      prefix.push_back(v);
      visit(next, traces, prefix);
      prefix.pop_back();
      traces.pop_back();
    }
  }

  Engine& engine_;
  const PermutationGroup& group_;
  bool trivial_;
  bool have_best_ = false;
  std::vector<std::vector<std::uint64_t>> best_traces_;
  std::vector<Triple> best_cert_;
  std::vector<Point> best_labeling_;
};

}  // namespace

std::vector<std::vector<Point>> refined_partition(const PartialTripleSystem& ts) {
  Engine engine(ts, SearchOptions{});
  Node root = engine.root();
  std::vector<std::vector<Point>> cells;
  const Partition& p = root.partition;
  for (std::uint32_t s = 0; s < ts.size(); s += p.length[s]) cells.push_back(engine.cell_points(p, s));
  return cells;
}

PermutationGroup automorphism_group(const PartialTripleSystem& ts, const SearchOptions& options) {
  if (ts.size() == 0) return PermutationGroup(0, {});
  Engine engine(ts, options);
  return AutomorphismSearch(engine).run();
}

CanonicalForm canonical_form(const PartialTripleSystem& ts, const SearchOptions& options) {
  if (ts.size() == 0) return CanonicalForm{0, {}, Permutation::identity(0)};
  Engine engine(ts, options);
  PermutationGroup group = AutomorphismSearch(engine).run();
  return CanonicalSearch(engine, group).run();
}

IsoCertificate are_isomorphic(const PartialTripleSystem& a, const PartialTripleSystem& b,
                              const SearchOptions& options) {
  IsoCertificate cert;
  if (a.size() != b.size()) {
    cert.reason = "different number of points (" + std::to_string(a.size()) + " vs " +
                  std::to_string(b.size()) + ")";
    return cert;
  }
  if (a.triples().size() != b.triples().size()) {
    cert.reason = "different number of triples";
    return cert;
  }
  CanonicalForm fa = canonical_form(a, options);
  CanonicalForm fb = canonical_form(b, options);
  if (!(fa == fb)) {
    cert.reason = "canonical forms differ";
    cert.form_a = std::move(fa.triples);
    cert.form_b = std::move(fb.triples);
    return cert;
  }
  Permutation map = fa.labeling * fb.labeling.inverse();
  // Verify triple-to-triple before handing the map out.
  const JoinTable& join = b.joins();
  for (const Triple& t : a.triples()) {
    if (join.third(map(t[0]), map(t[1])) != map(t[2])) {
      cert.reason = "internal error: canonical labelings do not compose to an isomorphism";
      return cert;
    }
  }
  cert.map = std::move(map);
  return cert;
}

}  // namespace sts
