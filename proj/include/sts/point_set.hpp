#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace sts {

using Point = std::uint32_t;

// Bit-packed subset of the points 0..universe-1.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe) {}
  PointSet(std::size_t universe, std::span<const Point> members);
  PointSet(std::size_t universe, std::initializer_list<Point> members);

  static PointSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Point p) const { return p < bits_.size() && bits_.test(p); }
  void insert(Point p);
  void erase(Point p);

  std::vector<Point> points() const;

  bool is_subset_of(const PointSet& other) const { return bits_.is_subset_of(other.bits_); }
  std::size_t intersection_size(const PointSet& other) const { return (bits_ & other.bits_).count(); }
  PointSet operator&(const PointSet& other) const;
  PointSet operator|(const PointSet& other) const;

  std::string to_string() const;  // "{0,3,5}"

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const PointSet& a, const PointSet& b) { return a.points() < b.points(); }

 private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace sts
