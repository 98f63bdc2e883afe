#include <random>
#include <set>

#include "doctest.h"
#include "sts/errors.hpp"
#include "sts/parameters.hpp"

using namespace sts;

namespace {

std::set<int> mod24(const std::set<BigInt>& residues) {
  std::set<int> out;
  for (const BigInt& r : residues) out.insert(static_cast<int>(residue(r, 24)));
  return out;
}

const std::set<int> kAdmissible24{1, 3, 7, 9, 13, 15, 19, 21};

BigInt random_big(std::mt19937_64& rng, int words) {
  BigInt v = 0;
  for (int i = 0; i < words; ++i) v = (v << 64) + rng();
  return v;
}

// Order of 2 mod p by repeated doubling.
unsigned slow_order(unsigned p) {
  unsigned x = 2 % p, n = 1;
  while (x != 1) {
    x = x * 2 % p;
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("delta_of reproduces the two residue rows") {
  std::vector<int> k1;
  for (std::uint32_t d : {1u, 3u, 7u, 9u}) k1.push_back(static_cast<int>(residue(delta_of(d, 0, 1, 3), 24)));
  CHECK(k1 == std::vector<int>{19, 15, 7, 3});

  std::set<int> k7;
  for (std::uint32_t d : {1u, 3u, 7u, 9u}) k7.insert(static_cast<int>(residue(delta_of(d, 0, 7, 3), 24)));
  CHECK(k7 == std::set<int>{1, 9, 13, 21});

  CHECK(delta_of(1, 0, 1, 3) == -5);
  CHECK(delta_of(3, 0, 1, 3) == -9);
  CHECK(residue(delta_of(3, 0, 1, 3), 24) == 15);
  CHECK(delta_of(1, 0, 7, 3) == -23);
  CHECK(residue(delta_of(1, 0, 7, 3), 24) == 1);
  CHECK_THROWS_AS(delta_of(5, 0, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(delta_of(1, 7, 7, 3), std::invalid_argument);
}

TEST_CASE("v = 3 and v = -9 mod 24 give the same residues") {
  for (std::uint32_t d : kDeltas) {
    for (int K : {1, 7, 31}) {
      CHECK(residue(delta_of(d, 0, K, 3), 24) == residue(delta_of(d, 0, K, 15), 24));
      CHECK(residue(delta_of(d, 0, K, 27), 24) == residue(delta_of(d, 0, K, 39), 24));
    }
  }
}

TEST_CASE("residue coverage over both K classes") {
  CHECK(mod24(residue_coverage(1, 27, 27)) == std::set<int>{3, 7, 15, 19});
  CHECK(mod24(residue_coverage(7, 3, 3)) == std::set<int>{1, 9, 13, 21});

  for (auto [v1, v2] : {std::pair{15, 87}, std::pair{27, 39}, std::pair{3, 111}}) {
    KChoice K = choose_K(v1, v2);
    std::set<int> both = mod24(residue_coverage(1, v1, v2));
    for (int r : mod24(residue_coverage(K.K, v1, v2))) both.insert(r);
    CHECK(both == kAdmissible24);
    // Within the K branch every class mod 24K is hit as r varies.
    std::set<BigInt> full = residue_coverage(K.K, v1, v2);
    CHECK(full.size() == 4 * static_cast<std::size_t>(K.K));
  }
  CHECK_THROWS_AS(residue_coverage(7, 15, 87), std::invalid_argument);  // 7 | 14
}

TEST_CASE("choose_K") {
  KChoice a = choose_K(15, 87);
  CHECK(a.k == 5);
  CHECK(a.K == 31);

  // 7 | 2^3 - 1 is excluded anyway; 31 | 63 - 1 forces k past 5.
  KChoice b = choose_K(63, 3);
  CHECK(b.k == 7);
  CHECK(b.K == 127);

  for (unsigned k = 3; k <= 200; k += 2) CHECK(residue((BigInt(1) << k) - 1, 24) == 7);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    BigInt v1 = 2 * (rng() % 5000) + 3, v2 = 2 * (rng() % 5000) + 3;
    for (KStrategy s : {KStrategy::smallest_prime, KStrategy::order_of_two}) {
      KChoice c = choose_K(v1, v2, s);
      CHECK(c.k > 3);
      CHECK(c.k % 2 == 1);
      CHECK(c.K == (BigInt(1) << c.k) - 1);
      CHECK(boost::multiprecision::gcd(c.K, v1 - 1) == 1);
      CHECK(boost::multiprecision::gcd(c.K, v2 - 1) == 1);
    }
    CHECK(choose_K(v1, v2).k <= choose_K(v1, v2, KStrategy::order_of_two).k);
  }
  CHECK_THROWS_AS(choose_K(4, 7), std::invalid_argument);
  CHECK_THROWS_AS(choose_K(1, 7), std::invalid_argument);
}

TEST_CASE("order-of-two condition implies K coprime to p") {
  for (unsigned p : {3u, 5u, 7u, 11u, 13u, 23u, 31u, 43u, 73u, 89u, 127u, 151u, 331u, 1103u}) {
    unsigned s = slow_order(p);
    for (unsigned k = 2; k <= 60; ++k) {
      if (std::gcd(k, s) != 1) continue;
      CHECK(((BigInt(1) << k) - 1) % p != 0);
    }
  }
}

TEST_CASE("reconstruction identity on random tuples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    unsigned k = i % 2 ? 0 : 5 + 2 * (rng() % 40);
    BigInt K = k ? (BigInt(1) << k) - 1 : BigInt(1);
    BigInt v1 = 2 * random_big(rng, 1 + i % 3) + 3;
    BigInt v2 = v1 + 2 * random_big(rng, 1);
    int choice = 1 + static_cast<int>(rng() % 2);
    std::uint32_t d = kDeltas[rng() % 8];
    BigInt r = random_big(rng, 2) % K;
    BigInt t = random_big(rng, 2);
    BigInt a = t + 1 + random_big(rng, 3);
    ParameterSolution s = derive(d, r, {k, K}, t, a, choice, v1, v2);
    const BigInt& v = choice == 1 ? v1 : v2;
    CHECK(s.x + v * (s.y - s.x) == s.Delta + 8 * 24 * K * K * v * a + 24 * K * t);
    CHECK(s.u == s.Delta + 8 * 24 * K * K * v * a + 24 * K * t);
    CHECK(residue(s.u - s.Delta, 24 * K) == 0);
    CHECK(residue(s.y, 8) == (k ? 1 : 7));
    CHECK_FALSE(y_admissible(s));
  }
}

TEST_CASE("threshold and consecutive a abut") {
  BigInt K = 31, v = 87, v2 = 87, Delta = delta_of(1, 0, K, v);
  CHECK(threshold(v2, K, Delta) == Delta + 8 * 24 * K * K * v2 * 8 * K * v2);
  // Runs for a and a + 1 meet exactly when t spans 8Kv values.
  BigInt a = 8 * K * v2;
  BigInt last_of_a = Delta + 192 * K * K * v * a + 24 * K * (8 * K * v - 1);
  BigInt first_of_next = Delta + 192 * K * K * v * (a + 1);
  CHECK(first_of_next - last_of_a == 24 * K);
}

TEST_CASE("solve_order at the threshold gives t = 0") {
  KChoice K = choose_K(15, 87);
  REQUIRE(K.K == 31);
  for (std::uint32_t d : kDeltas) {
    for (int r : {0, 5, 30}) {
      BigInt Delta = delta_of(d, r, K.K, 87);
      BigInt u = threshold(87, K.K, Delta);
      bool found = false;
      for (const auto& s : solve_order_all(u, 15, 87, K)) {
        CHECK(check_solution(s).empty());
        CHECK(s.u == u);
        if (s.K == 31 && s.v_choice == 2 && s.delta == d && s.r == r) {
          CHECK(s.t == 0);
          CHECK(s.a == 8 * 31 * 87);
          found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("solve_order is total above the coverage threshold") {
  KChoice K = choose_K(15, 87);
  BigInt start = coverage_threshold(15, 87, K);
  int solved = 0;
  for (BigInt u = start; u <= start + 48 * K.K; ++u) {
    BigInt r = residue(u, 6);
    if (r != 1 && r != 3) continue;
    ParameterSolution s = solve_order(u, 15, 87, K);
    CHECK(s.u == u);
    CHECK(check_solution(s).empty());
    CHECK(residue(s.y, 8) == (s.branch() == YBranch::double_doubling ? 7 : 1));
    auto all = solve_order_all(u, 15, 87, K);
    for (const auto& other : all) CHECK(s.y <= other.y);
    ++solved;
  }
  CHECK(solved == 16 * static_cast<int>(K.K) + 1);
  CHECK_THROWS_AS(solve_order(6 * start + 5, 15, 87, K), std::invalid_argument);
  CHECK_THROWS_AS(solve_order(7, 15, 87, K), BelowThreshold);
  try {
    solve_order(7, 15, 87, K);
  } catch (const BelowThreshold& e) {
    CHECK(e.threshold() == start);
  }
}

TEST_CASE("coverage threshold is sharp for some class") {
  KChoice K = choose_K(15, 87);
  BigInt start = coverage_threshold(15, 87, K);
  bool missing = false;
  for (BigInt u = start - 24 * K.K; u < start; ++u) {
    BigInt r = residue(u, 6);
    if ((r == 1 || r == 3) && solve_order_all(u, 15, 87, K).empty()) missing = true;
  }
  CHECK(missing);
}

TEST_CASE("certificate round trip and tamper detection") {
  KChoice K = choose_K(15, 87);
  BigInt u = coverage_threshold(15, 87, K) + 10;
  while (residue(u, 6) != 1 && residue(u, 6) != 3) u += 1;
  ParameterSolution s = solve_order(u, 15, 87, K);
  std::string text = to_certificate(s);
  ParameterSolution back = parse_certificate(text);
  CHECK(check_solution(back).empty());
  CHECK(to_certificate(back) == text);
  CHECK(text.find("y_admissible = false") != std::string::npos);

  ParameterSolution bad = back;
  bad.u += 6;
  CHECK_FALSE(check_solution(bad).empty());
  bad = back;
  bad.t = bad.a;
  CHECK_FALSE(check_solution(bad).empty());
  bad = back;
  bad.K = 63;
  CHECK_FALSE(check_solution(bad).empty());

  CHECK_THROWS_AS(parse_certificate("delta = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate("no equals sign"), std::invalid_argument);
}

TEST_CASE("bounds") {
  auto [b1, b2] = corollary26_bounds(7);
  CHECK(b1 == (BigInt(1) << 24) * 16807);
  BigInt seven25 = 1;
  for (int i = 0; i < 25; ++i) seven25 *= 7;
  CHECK(b2 == (BigInt(1) << 144) * seven25);
  CHECK(n_bound(7, 31) == 1536 * BigInt(31) * 31 * 31 * b2 * b2);
  SymbolicKBound sk = symbolic_k_bound(7);
  CHECK(sk.K_bound == "K = 2^k - 1 < 2^(2^169 * 7^30)");
}
