#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sts {

using BigInt = boost::multiprecision::cpp_int;

// Residues mod 24 that are 1 or 3 mod 6.
inline constexpr std::uint32_t kDeltas[] = {1, 3, 7, 9, 13, 15, 19, 21};

struct KChoice {
  unsigned k = 0;
  BigInt K;  // 2^k - 1
};

enum class KStrategy {
  smallest_prime,  // smallest prime k > 3 with gcd(2^k - 1, v_i - 1) = 1
  order_of_two,    // smallest prime k > 3 coprime to the order of 2 mod every odd prime dividing (v1-1)(v2-1)
};

// Requires odd v1, v2 >= 3.
KChoice choose_K(const BigInt& v1, const BigInt& v2, KStrategy strategy = KStrategy::smallest_prime);

// The interval the large-k strategy draws a prime from, and the resulting
// bound on K, as text: both are far too large to materialize.
struct SymbolicKBound {
  std::string k_interval;
  std::string K_bound;
};
SymbolicKBound symbolic_k_bound(const BigInt& v_star);

// delta (1 - v) - v K + 24 r (1 - v). Requires delta in kDeltas and
// 0 <= r < K.
BigInt delta_of(std::uint32_t delta, const BigInt& r, const BigInt& K, const BigInt& v);

// Nonnegative residue of a mod modulus.
BigInt residue(const BigInt& a, const BigInt& modulus);

// Residues mod 24K of delta_of over every delta in kDeltas, r in [0, K)
// and v in {v1, v2}. Requires gcd(24(v - 1), K) = 1 for both v and
// K <= 10^6; throws std::invalid_argument otherwise.
std::set<BigInt> residue_coverage(const BigInt& K, const BigInt& v1, const BigInt& v2);

// Delta + 8*24*K^2*v2 * 8*K*v2 = Delta + 1536 K^3 v2^2.
BigInt threshold(const BigInt& v2, const BigInt& K, const BigInt& Delta);

// The least order from which every admissible u is solved, taking for each
// residue class mod 24K the earliest branch that reaches it. Throws NotFound
// when some admissible class is never reached.
BigInt coverage_threshold(const BigInt& v1, const BigInt& v2, const KChoice& K);

// Maximum |V1| and |V2| for a given |V*|: 2^24 v*^5 and 2^144 v*^25.
std::pair<BigInt, BigInt> corollary26_bounds(const BigInt& v_star);

// 1536 K^3 |V2|^2 at the maximum |V2| for v_star: a bound on the threshold
// for a given K.
BigInt n_bound(const BigInt& v_star, const BigInt& K);

enum class YBranch {
  double_doubling,  // y = -1 (mod 8), K = 1
  product_with_pg,  // y = 1 (mod 8), K = 2^k - 1
};

struct ParameterSolution {
  std::uint32_t delta = 1;
  BigInt r;
  BigInt K;
  unsigned k = 0;  // 0 when K = 1
  BigInt t;
  BigInt a;
  int v_choice = 1;  // 1 or 2
  BigInt v1, v2;
  BigInt v, x, y, u, Delta;

  YBranch branch() const { return K == 1 ? YBranch::double_doubling : YBranch::product_with_pg; }
};

// Fills x, y, u, Delta and v from the free parameters.
ParameterSolution derive(std::uint32_t delta, const BigInt& r, const KChoice& K, const BigInt& t, const BigInt& a,
                         int v_choice, const BigInt& v1, const BigInt& v2);

// Violated invariants, empty when the certificate is sound. Checks the
// closed forms, u = x + v(y - x), a > t >= 0, a >= 8 K v2, y - x > 6 v2,
// y >= (8x + 7) K, and gcd(K, v_i - 1) = 1.
std::vector<std::string> check_solution(const ParameterSolution& s);

// y = K(-1 + 192 K a + 24 t) is 5 mod 6 for every K = 2^k - 1, so it is
// never the order of an STS.
bool y_admissible(const ParameterSolution& s);

// Every solution of u = Delta + 192 K'^2 v a + 24 K' t over K' in {1, K},
// v in {v1, v2}, delta and r, with a = floor(N / 8K'v), t = N mod 8K'v and
// a >= 8 K' v2; sorted by y, then v_choice, delta and r.
std::vector<ParameterSolution> solve_order_all(const BigInt& u, const BigInt& v1, const BigInt& v2,
                                               const KChoice& K);

// The first of solve_order_all. Throws std::invalid_argument when u is not
// 1 or 3 mod 6 and BelowThreshold when nothing solves it.
ParameterSolution solve_order(const BigInt& u, const BigInt& v1, const BigInt& v2, const KChoice& K);

class BelowThreshold : public std::runtime_error {
 public:
  BelowThreshold(const std::string& what, BigInt threshold)
      : std::runtime_error(what), threshold_(std::move(threshold)) {}
  const BigInt& threshold() const { return threshold_; }

 private:
  BigInt threshold_;
};

// "key = value" lines.
std::string to_certificate(const ParameterSolution& s);

// Parses to_certificate output; derived fields are read, not recomputed, so
// check_solution can catch tampering. Throws std::invalid_argument.
ParameterSolution parse_certificate(std::string_view text);

}  // namespace sts
