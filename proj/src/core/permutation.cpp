#include "sts/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sts {

Permutation::Permutation(std::vector<Point> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Point p : image_) {
    if (p >= image_.size() || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.image_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.image_[i] = static_cast<Point>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv.image_[image_[i]] = static_cast<Point>(i);
  return inv;
}

Permutation operator*(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation out;
  out.image_.resize(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) out.image_[i] = h.image_[g.image_[i]];
  return out;
}

std::string Permutation::cycles() const {
  std::ostringstream os;
  std::vector<bool> done(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (done[start] || image_[start] == start) continue;
    os << '(';
    Point p = static_cast<Point>(start);
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) os << ' ';
      os << p;
      first = false;
      p = image_[p];
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

bool is_automorphism(const PartialTripleSystem& ts, const Permutation& p) {
  if (p.degree() != ts.size()) return false;
  const JoinTable& join = ts.joins();
  for (const Triple& t : ts.triples()) {
    if (join.third(p(t[0]), p(t[1])) != p(t[2])) return false;
  }
  return true;
}

PointSet apply(const Permutation& p, const PointSet& s) {
  PointSet out(s.universe());
  for (Point x : s.points()) out.insert(p(x));
  return out;
}

}  // namespace sts
