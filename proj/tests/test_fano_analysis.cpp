#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "sts/constructions/classic.hpp"
#include "sts/constructions/embed.hpp"
#include "sts/constructions/rigid.hpp"
#include "sts/fano_analysis.hpp"
#include "sts/validate.hpp"

using namespace sts;

namespace {

MooreProduct product(std::size_t x, std::size_t y, std::size_t v) {
  Embedding e = embed_subsystem(x, y);
  auto lab = label_per_p7(e.system.system, e.subsystem, LabelingMode::best_effort);
  return moore({e.system.system, e.subsystem, steiner_system(v).system, lab});
}

struct KindCount {
  int type31 = 0, in_yv = 0, vsf = 0;
};

KindCount classify_all(const MooreProduct& u) {
  KindCount c;
  for (const auto& f : enumerate_fano(u.system)) {
    auto cls = classify_fano(u, f);
    if (std::holds_alternative<Type31>(cls.kind)) ++c.type31;
    if (std::holds_alternative<InYv>(cls.kind)) ++c.in_yv;
    if (std::holds_alternative<VSf>(cls.kind)) ++c.vsf;
  }
  return c;
}

}  // namespace

TEST_CASE("enumerate_fano on small systems") {
  CHECK(enumerate_fano(fixtures::fano()).size() == 1);
  CHECK(enumerate_fano(pg_sts(3).system).size() == 15);
  CHECK(enumerate_fano(fixtures::ag23()).empty());
  // PG(4,2) has 155 planes: [5 choose 3]_2.
  CHECK(enumerate_fano(pg_sts(4).system).size() == 155);
}

TEST_CASE("enumerate_fano matches the C(n,7) oracle") {
  std::vector<TripleSystem> corpus{fixtures::cyclic13(), fixtures::pasch_switch(fixtures::cyclic13()),
                                   pg_sts(3).system, doubling(bose(9).system).system};
  std::mt19937_64 rng(17);
  corpus.push_back(hill_climb_sts(15, rng));
  corpus.push_back(hill_climb_sts(19, rng));
  for (auto [x, y, v] : std::vector<std::array<std::size_t, 3>>{{1, 7, 3}, {3, 9, 3}, {7, 15, 3}, {3, 7, 7}}) {
    corpus.push_back(product(x, y, v).system);
  }
  for (const auto& ts : corpus) {
    REQUIRE(ts.size() <= 31);
    auto fast = enumerate_fano(ts);
    auto oracle = fixtures::brute_force_closed_7sets(ts);
    CHECK(fast.size() == oracle.size());
    CHECK(std::vector<FanoPoints>(oracle.begin(), oracle.end()) == fast);
  }
}

TEST_CASE("every plane of a Moore product classifies") {
  for (auto [x, y, v] : std::vector<std::array<std::size_t, 3>>{
           {1, 7, 3}, {3, 9, 3}, {7, 15, 3}, {3, 7, 7}, {1, 7, 7}, {1, 9, 7}, {1, 13, 7}}) {
    auto u = product(x, y, v);
    REQUIRE(u.system.size() <= 100);
    CAPTURE(u.system.size());
    KindCount c;
    CHECK_NOTHROW(c = classify_all(u));
    CHECK(c.type31 + c.in_yv + c.vsf == static_cast<int>(enumerate_fano(u.system).size()));
  }
}

TEST_CASE("all three kinds occur") {
  // A triple inside the Fano plane, multiplied by a Fano V.
  auto u = product(3, 7, 7);
  auto c = classify_all(u);
  CHECK(c.in_yv == 7);
  CHECK(c.vsf >= 1);
  CHECK(c.type31 >= 1);
}

TEST_CASE("V_{S,f} values lie in A6 and sum to zero") {
  auto u = product(1, 7, 7);
  const std::size_t m = u.input.labeling.m;
  for (const auto& f : enumerate_fano(u.system)) {
    auto cls = classify_fano(u, f);
    if (auto* vsf = std::get_if<VSf>(&cls.kind)) {
      for (std::size_t val : vsf->f) CHECK(6 * val % m == 0);
      CHECK(vsf->s.size() == 7);
    }
  }
  // S x 0 for the whole Fano V.
  PointSet s0(u.system.size());
  for (Point v = 0; v < 7; ++v) s0.insert(u.layout.of_pair(v, 0));
  auto pts = s0.points();
  FanoPoints plane{};
  std::copy(pts.begin(), pts.end(), plane.begin());
  auto cls = classify_fano(u, plane);
  REQUIRE(std::holds_alternative<VSf>(cls.kind));
  CHECK(std::get<VSf>(cls.kind).f == std::vector<std::size_t>(7, 0));
  CHECK(cls.describe().rfind("vsf", 0) == 0);
}

TEST_CASE("hand-built planes of the x, (v, +-a) shape classify as type31") {
  int built = 0;
  for (auto [x, y, v] : std::vector<std::array<std::size_t, 3>>{{1, 7, 3}, {3, 9, 3}, {1, 7, 7}}) {
    auto u = product(x, y, v);
    const auto& lab = u.input.labeling;
    const std::size_t m = lab.m;
    for (Point xp : u.input.x.points()) {
      for (const Triple& vt : u.input.v.triples()) {
        for (std::size_t a1 = 0; a1 < m; ++a1) {
          for (std::size_t a2 = 0; a2 < m; ++a2) {
            std::size_t a3 = (2 * m - a1 - a2) % m;
            std::array<std::size_t, 3> as{a1, a2, a3};
            bool lines = true;
            for (std::size_t a : as) lines = lines && u.input.y.joins().third(lab.point_of[a], lab.point_of[lab.opposite(a)]) == xp;
            if (!lines) continue;
            std::vector<Point> pts{u.layout.of_x(xp)};
            for (int i = 0; i < 3; ++i) {
              pts.push_back(u.layout.of_pair(vt[i], as[i]));
              pts.push_back(u.layout.of_pair(vt[i], lab.opposite(as[i])));
            }
            std::sort(pts.begin(), pts.end());
            FanoPoints plane{};
            std::copy(pts.begin(), pts.end(), plane.begin());
            REQUIRE(is_closed(u.system, PointSet(u.system.size(), pts)));
            auto cls = classify_fano(u, plane);
            REQUIRE(std::holds_alternative<Type31>(cls.kind));
            CHECK(std::get<Type31>(cls.kind).x == xp);
            ++built;
          }
        }
      }
    }
  }
  CHECK(built > 0);
}

TEST_CASE("at most one type31 plane through two points over distinct v") {
  auto u = product(3, 7, 7);
  std::map<std::pair<Point, Point>, int> through;
  for (const auto& f : enumerate_fano(u.system)) {
    if (!std::holds_alternative<Type31>(classify_fano(u, f).kind)) continue;
    for (Point p : f) {
      for (Point q : f) {
        if (p < q && !u.layout.is_x(p) && !u.layout.is_x(q) && u.layout.pair_of(p).first != u.layout.pair_of(q).first) {
          ++through[{p, q}];
        }
      }
    }
  }
  CHECK_FALSE(through.empty());
  for (const auto& [pair, count] : through) CHECK(count <= 1);
}

TEST_CASE("copies of Y and the bound on their meeting with V_{S,f}") {
  for (auto [x, y, v] : std::vector<std::array<std::size_t, 3>>{{1, 7, 3}, {3, 9, 9}, {1, 7, 7}}) {
    auto u = product(x, y, v);
    auto maps = all_vsf(u);
    CHECK_FALSE(maps.empty());
    for (Point vv = 0; vv < v; ++vv) {
      auto yv = yv_subsystem(u, vv);
      CHECK(yv.size() == y);
      CHECK(is_closed(u.system, yv));
      for (const auto& m : maps) CHECK(yv.intersection_size(vsf_points(u, m)) <= 1);
    }
    for (const auto& m : maps) CHECK(is_closed(u.system, vsf_points(u, m)));
    // The zero map is present for V itself.
    std::vector<Point> all(v);
    std::iota(all.begin(), all.end(), Point{0});
    bool zero = std::any_of(maps.begin(), maps.end(), [&](const VSf& m) {
      return m.s == all && std::all_of(m.f.begin(), m.f.end(), [](std::size_t a) { return a == 0; });
    });
    CHECK(zero);
  }
}

TEST_CASE("recognize_subsystem") {
  auto u = product(1, 7, 3);
  for (Point v = 0; v < 3; ++v) {
    auto r = recognize_subsystem(u, yv_subsystem(u, v));
    CHECK(r.kind == Recognition::Kind::is_yv);
    CHECK(r.v == v);
  }
  for (const auto& m : all_vsf(u)) {
    if (m.s.size() != 3) continue;
    auto r = recognize_subsystem(u, vsf_points(u, m));
    CHECK(r.kind == Recognition::Kind::is_vvf);
    CHECK(r.f == m.f);
  }
  auto x_only = recognize_subsystem(u, PointSet(u.system.size(), {0}));
  CHECK(x_only.kind == Recognition::Kind::other);
  CHECK_FALSE(x_only.note.empty());
  CHECK_THROWS_AS(recognize_subsystem(u, PointSet(u.system.size(), {1, 2})), std::invalid_argument);
}

TEST_CASE("classification preconditions") {
  auto odd = product(0, 7, 3);
  REQUIRE(odd.input.labeling.m == 7);
  auto planes = enumerate_fano(odd.system);
  REQUIRE_FALSE(planes.empty());
  CHECK_THROWS_AS(classify_fano(odd, planes.front()), std::invalid_argument);
  auto u = product(1, 7, 3);
  REQUIRE_FALSE(is_closed(u.system, PointSet(u.system.size(), {0, 1, 2, 3, 4, 5, 7})));
  CHECK_THROWS_AS(classify_fano(u, FanoPoints{0, 1, 2, 3, 4, 5, 7}), std::invalid_argument);
}
