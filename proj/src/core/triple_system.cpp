#include "sts/triple_system.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sts {

Triple make_triple(Point a, Point b, Point c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

JoinTable::JoinTable(std::size_t n, std::span<const Triple> triples)
    : n_(n), table_(n < 2 ? 0 : n * (n - 1) / 2, kNoPoint) {
  for (const Triple& t : triples) {
    table_[index(t[0], t[1])] = t[2];
    table_[index(t[0], t[2])] = t[1];
    table_[index(t[1], t[2])] = t[0];
  }
}

struct PartialTripleSystem::Cache {
  std::once_flag joins_once;
  std::once_flag incidence_once;
  JoinTable joins;
  std::vector<std::vector<std::uint32_t>> incidence;
};

PartialTripleSystem::PartialTripleSystem(std::size_t n, std::vector<Triple> triples)
    : n_(n), cache_(std::make_shared<Cache>()) {
  if (n >= kNoPoint) throw std::invalid_argument("too many points");
  for (Triple& t : triples) {
    std::sort(t.begin(), t.end());
    if (t[2] >= n) {
      throw std::invalid_argument("triple point " + std::to_string(t[2]) + " out of range for " +
                                  std::to_string(n) + " points");
    }
    if (t[0] == t[1] || t[1] == t[2]) {
      throw std::invalid_argument("triple with repeated point " + std::to_string(t[1]));
    }
  }
  std::sort(triples.begin(), triples.end());
  triples_ = std::make_shared<const std::vector<Triple>>(std::move(triples));
}

const JoinTable& PartialTripleSystem::joins() const {
  std::call_once(cache_->joins_once, [this] { cache_->joins = JoinTable(n_, *triples_); });
  return cache_->joins;
}

const std::vector<std::vector<std::uint32_t>>& PartialTripleSystem::incidence() const {
  std::call_once(cache_->incidence_once, [this] {
    cache_->incidence.assign(n_, {});
    const auto& ts = *triples_;
    for (std::uint32_t i = 0; i < ts.size(); ++i) {
      for (Point p : ts[i]) cache_->incidence[p].push_back(i);
    }
  });
  return cache_->incidence;
}

namespace {

// Closure by repeated joins; the member list doubles as the work queue.
std::optional<PointSet> closure(const PartialTripleSystem& ts, const PointSet& seed,
                                std::size_t cap) {
  const JoinTable& join = ts.joins();
  PointSet in = seed;
  std::vector<Point> members = seed.points();
  if (members.size() > cap) return std::nullopt;
  for (std::size_t i = 1; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Point t = join.third(members[i], members[j]);
      if (t == kNoPoint || in.contains(t)) continue;
      in.insert(t);
      members.push_back(t);
      if (members.size() > cap) return std::nullopt;
    }
  }
  return in;
}

}  // namespace

PointSet span(const PartialTripleSystem& ts, const PointSet& seed) {
  return *closure(ts, seed, std::numeric_limits<std::size_t>::max());
}

std::optional<PointSet> span_capped(const PartialTripleSystem& ts, const PointSet& seed,
                                    std::size_t cap) {
  return closure(ts, seed, cap);
}

bool is_closed(const PartialTripleSystem& ts, const PointSet& set) {
  const JoinTable& join = ts.joins();
  std::vector<Point> pts = set.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Point t = join.third(pts[i], pts[j]);
      if (t != kNoPoint && !set.contains(t)) return false;
    }
  }
  return true;
}

std::pair<TripleSystem, std::vector<Point>> induced_subsystem(const PartialTripleSystem& ts,
                                                              const PointSet& points) {
  std::vector<Point> original = points.points();
  std::vector<Point> local(ts.size(), kNoPoint);
  for (std::size_t i = 0; i < original.size(); ++i) local[original[i]] = static_cast<Point>(i);
  std::vector<Triple> triples;
  for (const Triple& t : ts.triples()) {
    if (points.contains(t[0]) && points.contains(t[1]) && points.contains(t[2])) {
      triples.push_back({local[t[0]], local[t[1]], local[t[2]]});
    }
  }
  return {TripleSystem(original.size(), std::move(triples)), std::move(original)};
}

TripleSystem relabel(const PartialTripleSystem& ts, std::span<const Point> image) {
  if (image.size() != ts.size()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<Triple> triples;
  triples.reserve(ts.triples().size());
  for (const Triple& t : ts.triples()) triples.push_back({image[t[0]], image[t[1]], image[t[2]]});
  return TripleSystem(ts.size(), std::move(triples));
}

}  // namespace sts
