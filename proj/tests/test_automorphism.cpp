#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "sts/automorphism.hpp"
#include "sts/errors.hpp"
#include "sts/validate.hpp"

using namespace sts;

namespace {

void check_group(const PartialTripleSystem& ts, const PermutationGroup& g) {
  for (const auto& gen : g.generators()) CHECK(is_automorphism(ts, gen));
  // Recount from the generators alone.
  PermutationGroup again(ts.size(), g.generators());
  CHECK(again.order() == g.order());
}

}  // namespace

TEST_CASE("Fano automorphism group matches the 7! scan") {
  auto fano = fixtures::fano();
  long long oracle = fixtures::brute_force_aut_order(fano);
  CHECK(oracle == 168);
  auto g = automorphism_group(fano);
  CHECK(g.order() == oracle);
  check_group(fano, g);
}

TEST_CASE("AG(2,3) automorphism group matches the 9! scan") {
  auto ag = fixtures::ag23();
  long long oracle = fixtures::brute_force_aut_order(ag);
  CHECK(oracle == 432);
  auto g = automorphism_group(ag);
  CHECK(g.order() == oracle);
  check_group(ag, g);
}

TEST_CASE("PG(3,2) and PG(4,2) orders") {
  // |GL(4,2)| = 20160, |GL(5,2)| = 9999360.
  CHECK(automorphism_group(fixtures::projective(3)).order() == 20160);
  auto pg4 = fixtures::projective(4);
  auto g = automorphism_group(pg4);
  CHECK(g.order() == 9999360);
  check_group(pg4, g);
}

TEST_CASE("the two STS(13) have groups of order 39 and 6") {
  auto c13 = fixtures::cyclic13();
  auto other = fixtures::pasch_switch(c13);
  REQUIRE(validate_sts(other).ok());
  CHECK(automorphism_group(c13).order() == 39);
  CHECK(automorphism_group(other).order() == 6);
}

TEST_CASE("degenerate and partial systems") {
  CHECK(automorphism_group(TripleSystem(0, {})).order() == 1);
  CHECK(automorphism_group(TripleSystem(1, {})).order() == 1);
  CHECK(automorphism_group(TripleSystem(3, {{0, 1, 2}})).order() == 6);
  // Two isolated points.
  CHECK(automorphism_group(PartialTripleSystem(2, {})).order() == 2);
  // A path of two triples {0,1,2},{2,3,4}: swap 0<->1, swap 3<->4, flip.
  CHECK(automorphism_group(PartialTripleSystem(5, {{0, 1, 2}, {2, 3, 4}})).order() == 8);
}

TEST_CASE("group order is invariant under relabeling") {
  std::mt19937_64 rng(11);
  auto c13 = fixtures::pasch_switch(fixtures::cyclic13());
  for (int i = 0; i < 10; ++i) {
    auto image = fixtures::random_relabeling(13, rng);
    CHECK(automorphism_group(relabel(c13, image)).order() == 6);
  }
}

TEST_CASE("node budget is enforced") {
  SearchOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(automorphism_group(fixtures::projective(3), tiny), BudgetExceeded);
}

TEST_CASE("canonical form is relabeling invariant") {
  std::mt19937_64 rng(2024);
  std::vector<TripleSystem> corpus{fixtures::fano(), fixtures::ag23(), fixtures::cyclic13(),
                                   fixtures::pasch_switch(fixtures::cyclic13()),
                                   fixtures::projective(3), fixtures::projective(4)};
  for (const auto& ts : corpus) {
    auto form = canonical_form(ts);
    CHECK(form.triples.size() == ts.triples().size());
    CHECK(relabel(ts, form.labeling.image()).triples() == form.triples);
    for (int i = 0; i < 100; ++i) {
      auto image = fixtures::random_relabeling(ts.size(), rng);
      CHECK(canonical_form(relabel(ts, image)) == form);
    }
  }
}

TEST_CASE("canonical forms separate the two STS(13)") {
  auto a = fixtures::cyclic13();
  auto b = fixtures::pasch_switch(a);
  CHECK_FALSE(canonical_form(a) == canonical_form(b));
  auto cert = are_isomorphic(a, b);
  CHECK_FALSE(cert.isomorphic());
  CHECK(cert.reason == "canonical forms differ");
  CHECK_FALSE(cert.form_a.empty());
}

TEST_CASE("are_isomorphic returns a verified map") {
  std::mt19937_64 rng(5);
  auto fano = fixtures::fano();
  auto image = fixtures::random_relabeling(7, rng);
  auto moved = relabel(fano, image);
  auto cert = are_isomorphic(fano, moved);
  REQUIRE(cert.isomorphic());
  CHECK(relabel(fano, cert.map->image()) == moved);
  CHECK(are_isomorphic(fano, fano).isomorphic());
  auto size_mismatch = are_isomorphic(fixtures::ag23(), fano);
  CHECK_FALSE(size_mismatch.isomorphic());
  CHECK(size_mismatch.form_a.empty());
}

TEST_CASE("refined partition splits partial systems by degree") {
  auto cells = refined_partition(PartialTripleSystem(5, {{0, 1, 2}, {2, 3, 4}}));
  CHECK(cells.size() == 2);
  auto fano_cells = refined_partition(fixtures::fano());
  CHECK(fano_cells.size() == 1);
}
