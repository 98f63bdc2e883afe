#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sts/point_set.hpp"
#include "sts/triple_system.hpp"

namespace sts {

// A bijection of 0..n-1, acting on the right: p^g = g(p).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Point> image);  // throws unless bijective

  static Permutation identity(std::size_t n);

  std::size_t degree() const { return image_.size(); }
  Point operator()(Point p) const { return image_[p]; }
  const std::vector<Point>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  // (g * h)(p) = h(g(p)): apply g first.
  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

  std::string cycles() const;  // "(0 1 2)(3 4)", "()" for the identity

 private:
  std::vector<Point> image_;
};

// True iff every triple maps to a triple of the same system.
bool is_automorphism(const PartialTripleSystem& ts, const Permutation& p);

// Image of a point set.
PointSet apply(const Permutation& p, const PointSet& s);

}  // namespace sts
