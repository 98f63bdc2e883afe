// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "sts/automorphism.hpp"
#include "sts/constructions/classic.hpp"
#include "sts/constructions/embed.hpp"
#include "sts/constructions/moore.hpp"
#include "sts/constructions/pointed.hpp"
#include "sts/fano_analysis.hpp"
#include "sts/parameters.hpp"
#include "sts/pstss.hpp"
#include "sts/subsystems.hpp"
#include "sts/validate.hpp"

using namespace sts;

namespace {

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitMooreGrid = 10;
constexpr double kLimitDoubling = 30;
constexpr double kLimitPaired = 120;
constexpr double kLimitPipeline = 300;

constexpr std::size_t kReconstructedPairs = 1000;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(int number, const std::string& title, const std::function<void(Outcome&)>& body,
               double limit = 0) {
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double elapsed = seconds_since(start);
  if (limit > 0) o.require(elapsed < limit, "took longer than the limit");
  std::ostringstream time;
  time << std::fixed << std::setprecision(2) << elapsed << " s";
  if (limit > 0) time << ", limit " << limit << " s";
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << number << "] " << title << ": " << o.detail.str() << " ("
            << time.str() << ")" << std::endl;
  if (!o.pass) ++failures;
}

MooreProduct product(std::size_t x, std::size_t y, std::size_t v) {
  Embedding e = embed_subsystem(x, y);
  auto lab = label_per_p7(e.system.system, e.subsystem, LabelingMode::best_effort);
  return moore({e.system.system, e.subsystem, steiner_system(v).system, lab});
}

struct Instance {
  std::size_t x, y, v;
};

// |U| <= 100 with m = y - x even.
const std::vector<Instance> kFanoInstances{{3, 7, 7}, {1, 7, 7}, {1, 9, 7}, {7, 15, 3}};

}  // namespace

int main() {
  criterion(1, "Moore validity on the (x, y, v) grid", [](Outcome& o) {
    std::size_t built = 0, valid = 0;
    for (std::size_t x : {1u, 3u, 7u}) {
      for (std::size_t y : {7u, 9u, 13u, 15u}) {
        if (y < 2 * x + 1) continue;
        for (std::size_t v : {3u, 7u, 9u}) {
          MooreProduct u = product(x, y, v);
          ++built;
          bool ok = validate_sts(u.system).ok() && u.system.size() == x + v * (y - x);
          valid += ok;
          o.require(ok, "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(v) + ")");
        }
      }
    }
    o.detail << valid << "/" << built << " products validate";
  }, kLimitMooreGrid);

  criterion(2, "doubling is PG(2,2)-pointed, double doubling PG(3,2)-2-pointed", [](Outcome& o) {
    for (std::size_t n : {7u, 9u, 13u, 15u}) {
      TripleSystem y = steiner_system(n).system;
      LabeledSystem d = doubling(y);
      o.require(static_cast<bool>(is_pg2_pointed(d.system, doubling_star(n))), "pointed " + std::to_string(n));
    }
    for (std::size_t n : {7u, 9u}) {
      TripleSystem y = steiner_system(n).system;
      LabeledSystem dd = doubling(doubling(y).system);
      auto [p, q] = double_doubling_pair(n);
      o.require(static_cast<bool>(is_pg3_2pointed(dd.system, p, q)), "2-pointed " + std::to_string(n));
      o.require(dd.system.size() % 8 == 7, "size mod 8 for " + std::to_string(n));
    }
    o.detail << "Y in {7, 9, 13, 15} pointed; Y in {7, 9} 2-pointed with size 7 (mod 8)";
  }, kLimitDoubling);

  criterion(3, "PG(3,2) x PG(3,2) is PG(2,2)-paired", [](Outcome& o) {
    LabeledSystem pg = pg_sts(3);
    LabeledSystem prod = direct_product(pg, pg);
    o.require(prod.system.size() == 225, "225 points");
    o.require(prod.system.size() % 8 == 1, "1 (mod 8)");
    o.require(validate_sts(prod.system).ok(), "valid STS");
    o.require(static_cast<bool>(is_pg2_paired(prod.system)), "paired");
    o.detail << prod.system.size() << " points, paired";
  }, kLimitPaired);

  criterion(4, "every Fano subsystem classifies; enumeration matches brute force", [](Outcome& o) {
    std::size_t planes = 0, unclassified = 0;
    for (const Instance& in : kFanoInstances) {
      MooreProduct u = product(in.x, in.y, in.v);
      o.require(u.system.size() <= 100 && (in.y - in.x) % 2 == 0, "instance shape");
      auto fanos = enumerate_fano(u.system);
      for (const auto& f : fanos) {
        ++planes;
        try {
          classify_fano(u, f);
        } catch (const Unclassifiable&) {
          ++unclassified;
        }
      }
      if (u.system.size() <= 31) {
        auto brute = fixtures::brute_force_closed_7sets(u.system);
        std::set<std::vector<Point>> a, b;
        for (const auto& f : fanos) {
          std::vector<Point> s(f.begin(), f.end());
          std::sort(s.begin(), s.end());
          a.insert(s);
        }
        for (const auto& f : brute) b.insert(std::vector<Point>(f.begin(), f.end()));
        o.require(a == b, "brute-force mismatch on |U| = " + std::to_string(u.system.size()));
      }
    }
    o.require(unclassified == 0, std::to_string(unclassified) + " unclassifiable");
    o.detail << planes << " planes over " << kFanoInstances.size() << " instances, " << unclassified
             << " unclassifiable";
  });

  criterion(5, "|Y_v meet V_{S,f}| <= 1", [](Outcome& o) {
    std::size_t checked = 0, worst = 0;
    for (const Instance& in : kFanoInstances) {
      MooreProduct u = product(in.x, in.y, in.v);
      auto twisted = all_vsf(u);
      for (Point v = 0; v < u.layout.v_size(); ++v) {
        PointSet yv = yv_subsystem(u, v);
        for (const VSf& vsf : twisted) {
          std::size_t meet = yv.intersection_size(vsf_points(u, vsf));
          worst = std::max(worst, meet);
          ++checked;
        }
      }
    }
    o.require(worst <= 1, "intersection of size " + std::to_string(worst));
    o.detail << checked << " (v, S, f) triples, largest intersection " << worst;
  });

  criterion(6, "automorphisms of V lift; Aut(U) for (1, 7, 3)", [](Outcome& o) {
    std::size_t lifted = 0;
    for (std::size_t x : {1u, 3u, 7u}) {
      for (std::size_t y : {7u, 9u, 13u, 15u}) {
        if (y < 2 * x + 1) continue;
        for (std::size_t v : {3u, 7u, 9u}) {
          MooreProduct u = product(x, y, v);
          PermutationGroup aut_v = automorphism_group(u.input.v);
          for (const Permutation& g : aut_v.generators()) {
            o.require(is_automorphism(u.system, lift_automorphism(u.layout, g)), "lift failed");
            ++lifted;
          }
        }
      }
    }
    MooreProduct u = product(1, 7, 3);
    PermutationGroup aut_u = automorphism_group(u.system);
    PermutationGroup aut_v = automorphism_group(u.input.v);
    for (const Permutation& g : aut_v.generators()) {
      o.require(aut_u.contains(lift_automorphism(u.layout, g)), "lifted generator not in Aut(U)");
    }
    // Elements of Aut(U) permuting the fibers {v} x A induce permutations of V.
    std::set<std::vector<Point>> induced;
    const std::size_t vs = u.layout.v_size(), m = u.layout.m();
    aut_u.for_each_element([&](const Permutation& g) {
      std::vector<Point> on_v(vs);
      for (Point v = 0; v < vs; ++v) {
        std::set<Point> targets;
        for (std::size_t a = 0; a < m; ++a) {
          Point image = g(u.layout.of_pair(v, a));
          if (u.layout.is_x(image)) return;
          targets.insert(u.layout.pair_of(image).first);
        }
        if (targets.size() != 1) return;
        on_v[v] = *targets.begin();
      }
      induced.insert(on_v);
    });
    bool all_in_aut_v = true;
    for (const auto& image : induced) all_in_aut_v = all_in_aut_v && aut_v.contains(Permutation(image));
    o.require(all_in_aut_v, "induced permutation outside Aut V");
    o.require(BigInt(induced.size()) == aut_v.order(), "fiber-preserving part does not cover Aut V");
    o.detail << lifted << " generators lifted over the grid; (1,7,3): |Aut U| = " << aut_u.order()
             << ", induced on V: " << induced.size() << " of |Aut V| = " << aut_v.order();
  });

  criterion(7, "order arithmetic tables, coverage and totality", [](Outcome& o) {
    std::vector<int> k1;
    for (std::uint32_t d : {1u, 3u, 7u, 9u}) k1.push_back(static_cast<int>(residue(delta_of(d, 0, 1, 3), 24)));
    o.require(k1 == std::vector<int>{19, 15, 7, 3}, "K = 1 row");
    std::set<int> k7;
    for (std::uint32_t d : {1u, 3u, 7u, 9u}) k7.insert(static_cast<int>(residue(delta_of(d, 0, 7, 3), 24)));
    o.require(k7 == std::set<int>{1, 9, 13, 21}, "K = 7 row");

    const BigInt v1 = 15, v2 = 87;
    KChoice K = choose_K(v1, v2);
    std::set<int> covered;
    for (const BigInt& kk : {BigInt(1), K.K}) {
      for (const BigInt& r : residue_coverage(kk, v1, v2)) covered.insert(static_cast<int>(residue(r, 24)));
    }
    o.require(covered == std::set<int>{1, 3, 7, 9, 13, 15, 19, 21}, "coverage mod 24");

    BigInt start = coverage_threshold(v1, v2, K);
    std::size_t solved = 0, admissible = 0;
    for (BigInt u = start; u <= start + 48 * K.K; ++u) {
      BigInt r6 = residue(u, 6);
      if (r6 != 1 && r6 != 3) continue;
      ++admissible;
      ParameterSolution s = solve_order(u, v1, v2, K);
      bool ok = s.u == u && s.x + s.v * (s.y - s.x) == u && check_solution(s).empty();
      solved += ok;
    }
    o.require(solved == admissible, "window not fully solved");
    o.detail << "rows match; coverage complete; K = " << K.K << ", " << solved << "/" << admissible
             << " orders solved in [" << start << ", +48K]";
  });

  criterion(8, "gadget rigidity and attachment", [](Outcome& o) {
    for (std::size_t n = 1; n <= 4; ++n) {
      GadgetQ g = build_q(n);
      o.require(g.system.size() == 4 * n + 10, "size of Q(" + std::to_string(n) + ")");
      o.require(automorphism_group(g.system).order() == 1, "Q(" + std::to_string(n) + ") not rigid");
    }
    std::vector<PartialTripleSystem> inputs{PartialTripleSystem(1, {}), PartialTripleSystem(2, {}),
                                            PartialTripleSystem(3, {}), PartialTripleSystem(3, {{0, 1, 2}})};
    std::ostringstream orders;
    for (const auto& v : inputs) {
      AttachedSystem a = attach_gadgets(v);
      const std::size_t n = v.size();
      o.require(a.system.size() == 4 * n * n + 10 * n, "attached size");
      BigInt before = automorphism_group(v).order(), after = automorphism_group(a.system).order();
      o.require(before == after, "order changed");
      orders << " " << before << "->" << after;
    }
    o.detail << "Q(1..4) rigid; Aut orders preserved:" << orders.str();
  });

  criterion(9, "Boolean space pipeline for n' in {6, 10, 14}", [](Outcome& o) {
    struct Case {
      std::string name;
      PartialTripleSystem vprime;
    };
    std::vector<Case> cases{{"cyclic(3)", cyclic_pstss(3).system},
                            {"cyclic(5)", cyclic_pstss(5).system},
                            {"gadgets(1 point)", attach_gadgets(PartialTripleSystem(1, {})).system}};
    for (const auto& c : cases) {
      const unsigned np = static_cast<unsigned>(c.vprime.size());
      BooleanSpace space(np);
      TripleSystem u = replace_triples(space, c.vprime);
      o.require(validate_sts(u).ok(), c.name + ": not an STS");
      o.require(pair_points_off_by_degree(u, space, c.vprime).empty(), c.name + ": pair-point degrees");
      std::mt19937_64 rng(np);
      std::uniform_int_distribution<Point> pick(0, static_cast<Point>(u.size() - 1));
      std::size_t agreed = 0;
      for (std::size_t i = 0; i < kReconstructedPairs; ++i) {
        Point x = pick(rng), y = pick(rng);
        if (x == y) y = (y + 1) % u.size();
        agreed += reconstruct_line(u, x, y) == make_triple(x, y, BooleanSpace::line_third(x, y));
      }
      o.require(agreed == kReconstructedPairs, c.name + ": reconstruction disagreed");
      PointSet expected(u.size());
      for (unsigned i = 0; i < np; ++i) expected.insert(BooleanSpace::singleton(i));
      o.require(recover_vprime(u, space) == expected, c.name + ": V' not recovered");
      o.detail << "n'=" << np << " (" << u.triples().size() << " triples) ";
    }
    o.detail << "valid, pair-point degrees 2, " << kReconstructedPairs << " lines each, V' recovered";
  }, kLimitPipeline);

  criterion(10, "W for V = STS(9), V1 a triple", [](Outcome& o) {
    TripleSystem v = fixtures::ag23();
    PointSet v1(9, {0, 1, 2});
    LabeledPartialSystem w = corollary47_build(v, v1);
    std::size_t stabilizer = 0;
    automorphism_group(v).for_each_element([&](const Permutation& g) {
      bool keeps = true;
      for (Point p : v1.points()) keeps = keeps && v1.contains(g(p));
      stabilizer += keeps;
    });
    BigInt aut_w = automorphism_group(w.system).order();
    o.require(aut_w == stabilizer, "orders differ");
    o.detail << "|Aut W| = " << aut_w << ", stabilizer = " << stabilizer;
  });

  criterion(11, "sigma variant with |A| = 12", [](Outcome& o) {
    TripleSystem y = skolem(13).system;
    PointSet x(13, {0});
    auto lab = label_per_p7(y, x, LabelingMode::best_effort);
    MooreInput in{y, x, steiner_system(3).system, lab};
    MooreProduct plain = moore(in);
    std::vector<Point> swap(12);
    std::iota(swap.begin(), swap.end(), Point{0});
    std::swap(swap[3], swap[5]);
    MooreProduct twisted = moore_variant_sigma(in, Permutation(swap));
    o.require(lab.m == 12, "m = 12");
    o.require(validate_sts(twisted.system).ok(), "sigma variant invalid");
    IsoCertificate cert = are_isomorphic(plain.system, twisted.system);
    o.detail << "valid on " << twisted.system.size() << " points; sigma = " << Permutation(swap).cycles()
             << "; isomorphic to the plain product: " << (cert.isomorphic() ? "yes" : "no");
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
