#include "sts/fano_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sts {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

template <typename T>
std::string join(const T& items) {
  std::string out;
  for (const auto& item : items) out += (out.empty() ? "" : ",") + str(item);
  return out;
}

// Backtracking over f: S -> A6, checking each triple of S once its last
// point (in S order) is assigned.
class VsfEnumerator {
 public:
  VsfEnumerator(const MooreProduct& u, std::vector<Point> s) : u_(u), s_(std::move(s)), closing_(s_.size()) {
    std::map<Point, std::size_t> pos;
    for (std::size_t i = 0; i < s_.size(); ++i) pos[s_[i]] = i;
    for (const Triple& t : u.input.v.triples()) {
      if (!pos.count(t[0]) || !pos.count(t[1]) || !pos.count(t[2])) continue;
      std::array<std::size_t, 3> at{pos[t[0]], pos[t[1]], pos[t[2]]};
      closing_[*std::max_element(at.begin(), at.end())].push_back(at);
    }
    values_ = u.input.labeling.a6();
  }

  std::vector<VSf> run() {
    f_.assign(s_.size(), 0);
    extend(0);
    return std::move(found_);
  }

 private:
  void extend(std::size_t i) {
    if (i == s_.size()) {
      found_.push_back({s_, f_});
      return;
    }
    const std::size_t m = u_.input.labeling.m;
    for (std::size_t val : values_) {
      f_[i] = val;
      bool ok = std::all_of(closing_[i].begin(), closing_[i].end(),
                            [&](const auto& t) { return (f_[t[0]] + f_[t[1]] + f_[t[2]]) % m == 0; });
      if (ok) extend(i + 1);
    }
  }

  const MooreProduct& u_;
  std::vector<Point> s_;
  std::vector<std::vector<std::array<std::size_t, 3>>> closing_;
  std::vector<std::size_t> values_;
  std::vector<std::size_t> f_;
  std::vector<VSf> found_;
};

bool sums_to_zero_on_triples(const MooreProduct& u, const std::vector<Point>& s, const std::vector<std::size_t>& f) {
  std::map<Point, std::size_t> value;
  for (std::size_t i = 0; i < s.size(); ++i) value[s[i]] = f[i];
  for (const Triple& t : u.input.v.triples()) {
    if (!value.count(t[0]) || !value.count(t[1]) || !value.count(t[2])) continue;
    if ((value[t[0]] + value[t[1]] + value[t[2]]) % u.input.labeling.m != 0) return false;
  }
  return true;
}

}  // namespace

std::string FanoClassification::describe() const {
  struct Visitor {
    std::string operator()(const Type31& t) const {
      return "type31 x=" + str(t.x) + " v=(" + join(t.v) + ") a=(" + join(t.a) + ")";
    }
    std::string operator()(const InYv& y) const {
      return y.inside_x ? "in_x" : "in_yv v=" + str(y.v);
    }
    std::string operator()(const VSf& s) const { return "vsf S={" + join(s.s) + "} f=(" + join(s.f) + ")"; }
  };
  return std::visit(Visitor{}, kind);
}

FanoClassification classify_fano(const MooreProduct& u, const FanoPoints& fano) {
  const CyclicLabeling& lab = u.input.labeling;
  const MooreLayout& layout = u.layout;
  if (u.sigma) throw std::invalid_argument("classification needs an untwisted product");
  if (lab.m % 2 != 0) throw std::invalid_argument("classification needs |A| even");
  for (std::size_t i = 0; i < 7; ++i) {
    if (fano[i] >= u.system.size()) throw std::invalid_argument("point out of range");
    for (std::size_t j = i + 1; j < 7; ++j) {
      Point t = u.system.joins().third(fano[i], fano[j]);
      if (!std::binary_search(fano.begin(), fano.end(), t)) throw std::invalid_argument("not a closed 7-set");
    }
  }
  auto fail = [&](const std::string& why) {
    return Unclassifiable("plane {" + join(fano) + "} " + why);
  };

  std::vector<Point> xs;
  std::map<Point, std::vector<std::size_t>> by_v;
  for (Point p : fano) {
    if (layout.is_x(p)) {
      xs.push_back(layout.y_point_of(p));
    } else {
      auto [v, a] = layout.pair_of(p);
      by_v[v].push_back(a);
    }
  }

  if (by_v.empty()) return {fano, InYv{0, true}};
  if (by_v.size() == 1) return {fano, InYv{by_v.begin()->first, false}};

  if (xs.empty() && by_v.size() == 7) {
    VSf out;
    for (const auto& [v, as] : by_v) {
      out.s.push_back(v);
      out.f.push_back(as.front());
    }
    if (!is_closed(u.input.v, PointSet(u.input.v.size(), out.s))) throw fail("projects onto a non-subsystem of V");
    for (std::size_t val : out.f) {
      if (!lab.in_a6(val)) throw fail("has a second coordinate " + str(val) + " outside A6");
    }
    if (!sums_to_zero_on_triples(u, out.s, out.f)) throw fail("has a triple whose coordinates do not sum to 0");
    return {fano, std::move(out)};
  }

  if (xs.size() == 1 && by_v.size() == 3) {
    Type31 out{xs.front(), {}, {}};
    std::array<std::array<std::size_t, 2>, 3> pairs{};
    std::size_t i = 0;
    for (const auto& [v, as] : by_v) {
      if (as.size() != 2 || lab.opposite(as[0]) != as[1]) throw fail("pairs at v=" + str(v) + " are not a, -a");
      Point pa = lab.point_of[as[0]];
      Point pb = lab.point_of[as[1]];
      if (u.input.y.joins().third(pa, pb) != out.x) throw fail("pair at v=" + str(v) + " does not join x in Y");
      out.v[i] = v;
      pairs[i] = {std::min(as[0], as[1]), std::max(as[0], as[1])};
      ++i;
    }
    if (u.input.v.joins().third(out.v[0], out.v[1]) != out.v[2]) throw fail("first coordinates are not a triple of V");
    const std::size_t m = lab.m;
    out.a = {pairs[0][0], pairs[1][0], pairs[2][0]};
    if ((out.a[0] + out.a[1] + out.a[2]) % m != 0) out.a[2] = pairs[2][1];
    if ((out.a[0] + out.a[1] + out.a[2]) % m != 0) throw fail("no sign choice sums to 0");
    // The four triples with an even number of sign flips.
    for (unsigned flips : {0u, 3u, 5u, 6u}) {
      std::array<Point, 3> pts{};
      for (std::size_t k = 0; k < 3; ++k) {
        std::size_t a = flips >> k & 1 ? lab.opposite(out.a[k]) : out.a[k];
        pts[k] = layout.of_pair(out.v[k], a);
      }
      if (u.system.joins().third(pts[0], pts[1]) != pts[2]) throw fail("is missing a sign triple");
    }
    return {fano, out};
  }
  throw fail("has " + str(xs.size()) + " points of X over " + str(by_v.size()) + " points of V");
}

PointSet yv_subsystem(const MooreProduct& u, Point v) {
  PointSet out(u.system.size());
  for (Point p = 0; p < u.layout.x_size(); ++p) out.insert(p);
  for (std::size_t a = 0; a < u.layout.m(); ++a) out.insert(u.layout.of_pair(v, a));
  return out;
}

std::vector<VSf> all_vsf(const MooreProduct& u) {
  const TripleSystem& v = u.input.v;
  std::set<std::vector<Point>> subsystems;
  for (const Triple& t : v.triples()) subsystems.insert({t[0], t[1], t[2]});
  for (const FanoPoints& f : enumerate_fano(v)) subsystems.insert({f.begin(), f.end()});
  std::vector<Point> all(v.size());
  for (Point p = 0; p < v.size(); ++p) all[p] = p;
  if (!all.empty()) subsystems.insert(all);

  std::vector<VSf> out;
  for (const auto& s : subsystems) {
    auto found = VsfEnumerator(u, s).run();
    out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  }
  return out;
}

PointSet vsf_points(const MooreProduct& u, const VSf& vsf) {
  PointSet out(u.system.size());
  for (std::size_t i = 0; i < vsf.s.size(); ++i) out.insert(u.layout.of_pair(vsf.s[i], vsf.f[i]));
  return out;
}

Recognition recognize_subsystem(const MooreProduct& u, const PointSet& w) {
  if (w.universe() != u.system.size() || !is_closed(u.system, w)) {
    throw std::invalid_argument("recognition needs a closed point set of the product");
  }
  const std::size_t nv = u.layout.v_size();
  Recognition out;
  if (w.size() == u.input.y.size()) {
    for (Point v = 0; v < nv; ++v) {
      if (w == yv_subsystem(u, v)) {
        out.kind = Recognition::Kind::is_yv;
        out.v = v;
        return out;
      }
    }
    out.note = "has |Y| points but is no X u (v x A)";
  }
  if (w.size() == nv) {
    bool meets_once = true;
    for (Point v = 0; v < nv && meets_once; ++v) meets_once = w.intersection_size(yv_subsystem(u, v)) <= 1;
    if (meets_once) {
      std::vector<std::size_t> f(nv, 0);
      std::vector<char> seen(nv, 0);
      bool shape = true;
      for (Point p : w.points()) {
        if (u.layout.is_x(p)) {
          shape = false;
          break;
        }
        auto [v, a] = u.layout.pair_of(p);
        shape = shape && !seen[v] && u.input.labeling.in_a6(a);
        seen[v] = 1;
        f[v] = a;
      }
      std::vector<Point> all(nv);
      for (Point p = 0; p < nv; ++p) all[p] = p;
      if (shape && sums_to_zero_on_triples(u, all, f)) {
        out.kind = Recognition::Kind::is_vvf;
        out.f = std::move(f);
        out.note.clear();
        return out;
      }
      out.note = "has |V| points and meets each X u (v x A) at most once but is no {(v, f(v))}";
    } else if (out.note.empty()) {
      out.note = "has |V| points but meets some X u (v x A) twice";
    }
  }
  if (out.note.empty()) out.note = "size " + str(w.size()) + " matches neither |Y| nor |V|";
  return out;
}

}  // namespace sts
