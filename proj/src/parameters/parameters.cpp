#include "sts/parameters.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include <boost/integer/common_factor.hpp>

#include "sts/errors.hpp"

namespace sts {

namespace {

using boost::multiprecision::pow;

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

bool is_prime(unsigned k) {
  if (k < 2) return false;
  for (unsigned d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

BigInt mersenne(unsigned k) { return (BigInt(1) << k) - 1; }

void require_odd_at_least_3(const BigInt& v, const char* name) {
  if (v < 3 || v % 2 == 0) throw std::invalid_argument(std::string(name) + " must be odd and at least 3");
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max() / 4) {
    throw Unsupported(std::string(what) + " is too large to factor");
  }
  return v.convert_to<std::uint64_t>();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1, b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

// Multiplicative order of 2 modulo an odd prime p.
std::uint64_t order_of_two(std::uint64_t p) {
  std::uint64_t order = p - 1;
  for (std::uint64_t q : prime_factors(p - 1)) {
    while (order % q == 0 && pow_mod(2, order / q, p) == 1) order /= q;
  }
  return order;
}

bool valid_delta(std::uint32_t d) { return std::find(std::begin(kDeltas), std::end(kDeltas), d) != std::end(kDeltas); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

KChoice choose_K(const BigInt& v1, const BigInt& v2, KStrategy strategy) {
  require_odd_at_least_3(v1, "v1");
  require_odd_at_least_3(v2, "v2");
  std::vector<std::uint64_t> orders;
  if (strategy == KStrategy::order_of_two) {
    std::vector<std::uint64_t> primes = prime_factors(to_u64(v1 - 1, "v1 - 1"));
    for (std::uint64_t p : prime_factors(to_u64(v2 - 1, "v2 - 1"))) primes.push_back(p);
    for (std::uint64_t p : primes) {
      if (p > 2) orders.push_back(order_of_two(p));
    }
  }
  for (unsigned k = 5;; k += 2) {
    if (!is_prime(k)) continue;
    if (strategy == KStrategy::order_of_two) {
      bool coprime = std::all_of(orders.begin(), orders.end(), [k](std::uint64_t s) { return s % k != 0; });
      if (coprime) return {k, mersenne(k)};
    } else {
      BigInt K = mersenne(k);
      if (big_gcd(K, v1 - 1) == 1 && big_gcd(K, v2 - 1) == 1) return {k, K};
    }
  }
}

SymbolicKBound symbolic_k_bound(const BigInt& v_star) {
  std::string v = v_star.str();
  return {"2^168 * " + v + "^30 < k <= 2^169 * " + v + "^30", "K = 2^k - 1 < 2^(2^169 * " + v + "^30)"};
}

BigInt delta_of(std::uint32_t delta, const BigInt& r, const BigInt& K, const BigInt& v) {
  if (!valid_delta(delta)) throw std::invalid_argument("delta must be 1 or 3 mod 6 and below 24");
  if (r < 0 || r >= K) throw std::invalid_argument("r must lie in [0, K)");
  return BigInt(delta) * (1 - v) - v * K + 24 * r * (1 - v);
}

BigInt residue(const BigInt& a, const BigInt& modulus) {
  BigInt m = a % modulus;
  return m < 0 ? m + modulus : m;
}

std::set<BigInt> residue_coverage(const BigInt& K, const BigInt& v1, const BigInt& v2) {
  if (K < 1 || K > 1'000'000) throw std::invalid_argument("residue coverage needs 1 <= K <= 10^6");
  for (const BigInt& v : {v1, v2}) {
    if (big_gcd(24 * (v - 1), K) != 1) {
      throw std::invalid_argument("gcd(24(v - 1), K) != 1 for v = " + v.str());
    }
  }
  std::set<BigInt> out;
  const BigInt modulus = 24 * K;
  for (const BigInt& v : {v1, v2}) {
    for (std::uint32_t d : kDeltas) {
      for (BigInt r = 0; r < K; ++r) out.insert(residue(delta_of(d, r, K, v), modulus));
    }
  }
  return out;
}

BigInt threshold(const BigInt& v2, const BigInt& K, const BigInt& Delta) { return Delta + 1536 * K * K * K * v2 * v2; }

BigInt coverage_threshold(const BigInt& v1, const BigInt& v2, const KChoice& choice) {
  const BigInt& K = choice.K;
  if (K < 1 || K > 100'000) throw std::invalid_argument("coverage threshold needs 1 <= K <= 10^5");
  const std::uint64_t modulus = (24 * K).convert_to<std::uint64_t>();
  std::vector<std::optional<BigInt>> best(modulus);
  std::vector<BigInt> branch_k{1};
  if (K != 1) branch_k.push_back(K);
  for (const BigInt& kk : branch_k) {
    const std::uint64_t step = (24 * kk).convert_to<std::uint64_t>();
    for (const BigInt& v : {v1, v2}) {
      for (std::uint32_t d : kDeltas) {
        for (BigInt r = 0; r < kk; ++r) {
          BigInt Delta = delta_of(d, r, kk, v);
          BigInt start = Delta + 1536 * kk * kk * kk * v * v2;
          std::uint64_t c0 = residue(Delta, step).convert_to<std::uint64_t>();
          for (std::uint64_t c = c0; c < modulus; c += step) {
            if (!best[c] || start < *best[c]) best[c] = start;
          }
        }
      }
    }
  }
  BigInt worst = 0;
  for (std::uint64_t c = 0; c < modulus; ++c) {
    if (c % 6 != 1 && c % 6 != 3) continue;
    if (!best[c]) throw NotFound("no branch reaches orders = " + std::to_string(c) + " mod " + std::to_string(modulus));
    worst = std::max(worst, *best[c]);
  }
  return worst;
}

std::pair<BigInt, BigInt> corollary26_bounds(const BigInt& v_star) {
  return {(BigInt(1) << 24) * pow(v_star, 5), (BigInt(1) << 144) * pow(v_star, 25)};
}

BigInt n_bound(const BigInt& v_star, const BigInt& K) {
  BigInt v2 = corollary26_bounds(v_star).second;
  return 1536 * K * K * K * v2 * v2;
}

ParameterSolution derive(std::uint32_t delta, const BigInt& r, const KChoice& K, const BigInt& t, const BigInt& a,
                         int v_choice, const BigInt& v1, const BigInt& v2) {
  if (v_choice != 1 && v_choice != 2) throw std::invalid_argument("v_choice must be 1 or 2");
  ParameterSolution s;
  s.delta = delta;
  s.r = r;
  s.K = K.K;
  s.k = K.k;
  s.t = t;
  s.a = a;
  s.v_choice = v_choice;
  s.v1 = v1;
  s.v2 = v2;
  s.v = v_choice == 1 ? v1 : v2;
  s.x = delta + 24 * r + 24 * K.K * t;
  s.y = K.K * (-1 + 8 * 24 * K.K * a + 24 * t);
  s.u = s.x + s.v * (s.y - s.x);
  s.Delta = delta_of(delta, r, K.K, s.v);
  return s;
}

std::vector<std::string> check_solution(const ParameterSolution& s) {
  std::vector<std::string> bad;
  if (!valid_delta(s.delta)) bad.push_back("delta is not 1 or 3 mod 6 below 24");
  if (s.K < 1 || s.r < 0 || s.r >= s.K) bad.push_back("r outside [0, K)");
  if (s.K != 1) {
    if (s.k <= 3 || s.k % 2 == 0 || s.K != mersenne(s.k)) bad.push_back("K is not 2^k - 1 for odd k > 3");
    if (s.K % 24 != 7) bad.push_back("K is not 7 mod 24");
    if (big_gcd(s.K, s.v1 - 1) != 1 || big_gcd(s.K, s.v2 - 1) != 1) bad.push_back("K shares a factor with v_i - 1");
  }
  if (bad.empty()) {
    ParameterSolution re = derive(s.delta, s.r, {s.k, s.K}, s.t, s.a, s.v_choice, s.v1, s.v2);
    if (re.v != s.v) bad.push_back("v does not match v_choice");
    if (re.x != s.x) bad.push_back("x != delta + 24r + 24Kt");
    if (re.y != s.y) bad.push_back("y != K(-1 + 192Ka + 24t)");
    if (re.Delta != s.Delta) bad.push_back("Delta != delta(1 - v) - vK + 24r(1 - v)");
  }
  if (s.u != s.x + s.v * (s.y - s.x)) bad.push_back("u != x + v(y - x)");
  if (s.u != s.Delta + 8 * 24 * s.K * s.K * s.v * s.a + 24 * s.K * s.t) bad.push_back("u != Delta + 192K^2va + 24Kt");
  if (!(s.a > s.t && s.t >= 0)) bad.push_back("need a > t >= 0");
  if (s.a < 8 * s.K * s.v2) bad.push_back("need a >= 8K v2");
  if (s.y - s.x <= 6 * s.v2) bad.push_back("need y - x > 6 v2");
  if (s.y < (8 * s.x + 7) * s.K) bad.push_back("need y >= (8x + 7)K");
  return bad;
}

bool y_admissible(const ParameterSolution& s) {
  BigInt r = residue(s.y, 6);
  return r == 1 || r == 3;
}

std::vector<ParameterSolution> solve_order_all(const BigInt& u, const BigInt& v1, const BigInt& v2,
                                               const KChoice& K) {
  require_odd_at_least_3(v1, "v1");
  require_odd_at_least_3(v2, "v2");
  std::vector<ParameterSolution> out;
  std::vector<KChoice> branches{{0, 1}};
  if (K.K != 1) branches.push_back(K);
  for (const KChoice& kc : branches) {
    const BigInt& kk = kc.K;
    for (int choice : {1, 2}) {
      const BigInt& v = choice == 1 ? v1 : v2;
      const BigInt step = 8 * kk * v;
      for (std::uint32_t d : kDeltas) {
        for (BigInt r = 0; r < kk; ++r) {
          BigInt diff = u - delta_of(d, r, kk, v);
          if (diff < 0 || diff % (24 * kk) != 0) continue;
          BigInt n = diff / (24 * kk);
          BigInt a = n / step;
          BigInt t = n % step;
          if (a < 8 * kk * v2) continue;
          out.push_back(derive(d, r, kc, t, a, choice, v1, v2));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ParameterSolution& p, const ParameterSolution& q) {
    return std::tie(p.y, p.v_choice, p.delta, p.r) < std::tie(q.y, q.v_choice, q.delta, q.r);
  });
  return out;
}

ParameterSolution solve_order(const BigInt& u, const BigInt& v1, const BigInt& v2, const KChoice& K) {
  BigInt r6 = residue(u, 6);
  if (r6 != 1 && r6 != 3) throw std::invalid_argument("u = " + u.str() + " is not 1 or 3 mod 6");
  auto all = solve_order_all(u, v1, v2, K);
  if (!all.empty()) return all.front();
  BigInt bound;
  std::string detail;
  try {
    bound = coverage_threshold(v1, v2, K);
    detail = "threshold " + bound.str();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  throw BelowThreshold("no parameters realize u = " + u.str() + " (" + detail + ")", bound);
}

std::string to_certificate(const ParameterSolution& s) {
  std::ostringstream out;
  out << "delta = " << s.delta << "\n"
      << "r = " << s.r << "\n"
      << "K = " << s.K << "\n"
      << "k = " << s.k << "\n"
      << "t = " << s.t << "\n"
      << "a = " << s.a << "\n"
      << "v_choice = " << s.v_choice << "\n"
      << "v1 = " << s.v1 << "\n"
      << "v2 = " << s.v2 << "\n"
      << "v = " << s.v << "\n"
      << "x = " << s.x << "\n"
      << "y = " << s.y << "\n"
      << "u = " << s.u << "\n"
      << "Delta = " << s.Delta << "\n"
      << "branch = " << (s.branch() == YBranch::double_doubling ? "double_doubling" : "product_with_pg") << "\n"
      << "y_mod_8 = " << residue(s.y, 8) << "\n"
      << "y_admissible = " << yes_no(y_admissible(s)) << "\n";
  return out.str();
}

ParameterSolution parse_certificate(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key = value");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto get = [&](const std::string& key) -> BigInt {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("certificate lacks " + key);
    try {
      return BigInt(it->second);
    } catch (const std::exception&) {
      throw std::invalid_argument("certificate value for " + key + " is not an integer");
    }
  };
  ParameterSolution s;
  s.delta = get("delta").convert_to<std::uint32_t>();
  s.r = get("r");
  s.K = get("K");
  s.k = get("k").convert_to<unsigned>();
  s.t = get("t");
  s.a = get("a");
  s.v_choice = get("v_choice").convert_to<int>();
  s.v1 = get("v1");
  s.v2 = get("v2");
  s.v = get("v");
  s.x = get("x");
  s.y = get("y");
  s.u = get("u");
  s.Delta = get("Delta");
  return s;
}

}  // namespace sts
