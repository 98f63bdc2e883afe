#include "sts/point_set.hpp"

#include <sstream>
#include <stdexcept>

namespace sts {

PointSet::PointSet(std::size_t universe, std::span<const Point> members) : bits_(universe) {
  for (Point p : members) insert(p);
}

PointSet::PointSet(std::size_t universe, std::initializer_list<Point> members) : bits_(universe) {
  for (Point p : members) insert(p);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  s.bits_.set();
  return s;
}

void PointSet::insert(Point p) {
  if (p >= bits_.size()) {
    throw std::out_of_range("point " + std::to_string(p) + " outside universe of size " +
                            std::to_string(bits_.size()));
  }
  bits_.set(p);
}

void PointSet::erase(Point p) {
  if (p < bits_.size()) bits_.reset(p);
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != decltype(bits_)::npos; i = bits_.find_next(i)) {
    out.push_back(static_cast<Point>(i));
  }
  return out;
}

PointSet PointSet::operator&(const PointSet& other) const {
  PointSet out;
  out.bits_ = bits_ & other.bits_;
  return out;
}

PointSet PointSet::operator|(const PointSet& other) const {
  PointSet out;
  out.bits_ = bits_ | other.bits_;
  return out;
}

std::string PointSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Point p : points()) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace sts
