#include "sts/permutation_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace sts {

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::span<const Point> base_prefix)
    : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (Point b : base_prefix) {
    if (std::find(base_.begin(), base_.end(), b) != base_.end()) continue;
    base_.push_back(b);
    levels_.push_back(Level{b, {}, {}, {}, {}});
  }
  for (const auto& g : generators_) extend_base_for(g);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : generators_) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j) {
        if (g(base_[j]) != base_[j]) {
          fixes_prefix = false;
          break;
        }
      }
      if (fixes_prefix) levels_[i].strong.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }
  schreier_sims();
}

void PermutationGroup::extend_base_for(const Permutation& g) {
  for (Point b : base_) {
    if (g(b) != b) return;
  }
  for (Point p = 0; p < degree_; ++p) {
    if (g(p) != p) {
      base_.push_back(p);
      levels_.push_back(Level{p, {}, {}, {}, {}});
      return;
    }
  }
}

void PermutationGroup::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.base_point);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.transversal_index.assign(degree_, -1);
  level.transversal_index[level.base_point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point p = level.orbit[i];
    for (const auto& s : level.strong) {
      Point q = s(p);
      if (level.transversal_index[q] >= 0) continue;
      level.transversal_index[q] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(q);
      level.transversal.push_back(level.transversal[level.transversal_index[p]] * s);
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(Permutation g,
                                                           std::size_t start) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    int t = level.transversal_index[g(level.base_point)];
    if (t < 0) return {std::move(g), i};
    g = g * level.transversal[t].inverse();
  }
  return {std::move(g), levels_.size()};
}

void PermutationGroup::schreier_sims() {
  if (levels_.empty()) return;
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    Level& level = levels_[i];
    for (std::size_t oi = 0; !restarted && oi < level.orbit.size(); ++oi) {
      const Permutation& u = level.transversal[oi];
      for (std::size_t si = 0; !restarted && si < level.strong.size(); ++si) {
        const Permutation& s = level.strong[si];
        Point image = s(level.orbit[oi]);
        Permutation h = u * s * level.transversal[level.transversal_index[image]].inverse();
        auto [residue, j] = sift(std::move(h), i + 1);
        if (j == levels_.size() && residue.is_identity()) continue;
        if (j == levels_.size()) {
          extend_base_for(residue);
        }
        for (std::size_t l = i + 1; l <= j && l < levels_.size(); ++l) {
          levels_[l].strong.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        // Resume at the deepest level that changed; the loop decrement
        // lands on it.
        i = std::min(j, levels_.size() - 1) + 1;
        restarted = true;
      }
    }
  }
}

BigInt PermutationGroup::order() const {
  BigInt n = 1;
  for (const auto& level : levels_) n *= level.orbit.size();
  return n;
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, j] = sift(g, 0);
  return j == levels_.size() && residue.is_identity();
}

std::vector<Point> PermutationGroup::orbit(Point p) const {
  std::vector<Point> out{p};
  std::vector<bool> seen(degree_, false);
  seen[p] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators_) {
      Point q = g(out[i]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> PermutationGroup::orbit_representatives() const {
  std::vector<Point> rep(degree_);
  for (Point p = 0; p < degree_; ++p) rep[p] = p;
  // Union-find over generator images; roots are kept minimal.
  auto find = [&rep](Point p) {
    while (rep[p] != p) {
      rep[p] = rep[rep[p]];
      p = rep[p];
    }
    return p;
  };
  for (const auto& g : generators_) {
    for (Point p = 0; p < degree_; ++p) {
      Point a = find(p), b = find(g(p));
      if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
  }
  for (Point p = 0; p < degree_; ++p) rep[p] = find(p);
  return rep;
}

std::vector<Permutation> PermutationGroup::stabilizer_generators(
    std::span<const Point> points) const {
  std::vector<Point> prefix;
  for (Point b : points) {
    if (std::find(prefix.begin(), prefix.end(), b) == prefix.end()) prefix.push_back(b);
  }
  // Rebuilt with the prefix leading the base, level |prefix| holds strong
  // generators for the pointwise stabilizer.
  PermutationGroup chain(degree_, generators_, prefix);
  if (prefix.size() >= chain.levels_.size()) return {};
  return chain.levels_[prefix.size()].strong;
}

void PermutationGroup::for_each_element(
    const std::function<void(const Permutation&)>& visit) const {
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t level,
                                                                 const Permutation& acc) {
    if (level == levels_.size()) {
      visit(acc);
      return;
    }
    for (const auto& u : levels_[level].transversal) rec(level + 1, u * acc);
  };
  rec(0, Permutation::identity(degree_));
}

}  // namespace sts
