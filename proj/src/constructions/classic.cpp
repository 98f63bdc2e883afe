#include "sts/constructions/classic.hpp"

#include <stdexcept>

namespace sts {

namespace {

std::string pair_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Point pt(std::size_t i) { return static_cast<Point>(i); }

}  // namespace

LabeledSystem with_index_names(TripleSystem ts) {
  std::vector<std::string> names(ts.size());
  for (std::size_t i = 0; i < names.size(); ++i) names[i] = std::to_string(i);
  return {std::move(ts), std::move(names)};
}

LabeledSystem bose(std::size_t n) {
  if (n % 6 != 3) throw std::invalid_argument("bose needs n = 3 (mod 6), got " + std::to_string(n));
  const std::size_t q = n / 3;  // 2t + 1
  const std::size_t half = (q + 1) / 2;  // inverse of 2 mod q
  auto at = [](std::size_t x, std::size_t i) { return pt(3 * x + i % 3); };
  std::vector<Triple> triples;
  triples.reserve(sts_triple_count(n));
  for (std::size_t x = 0; x < q; ++x) triples.push_back(make_triple(at(x, 0), at(x, 1), at(x, 2)));
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = x + 1; y < q; ++y) {
      std::size_t xy = (x + y) * half % q;
      for (std::size_t i = 0; i < 3; ++i) triples.push_back(make_triple(at(x, i), at(y, i), at(xy, i + 1)));
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t i = 0; i < 3; ++i) names[3 * x + i] = pair_name(x, i);
  }
  return {TripleSystem(n, std::move(triples)), std::move(names)};
}

LabeledSystem skolem(std::size_t n) {
  if (n % 6 != 1) throw std::invalid_argument("skolem needs n = 1 (mod 6), got " + std::to_string(n));
  const std::size_t t = n / 6;
  const std::size_t q = 2 * t;
  auto at = [](std::size_t x, std::size_t i) { return pt(1 + 3 * x + i % 3); };
  // Half-idempotent commutative quasigroup on Z_{2t}.
  auto op = [&](std::size_t x, std::size_t y) {
    std::size_t s = (x + y) % q;
    return s % 2 == 0 ? s / 2 : (s + q - 1) / 2;
  };
  std::vector<Triple> triples;
  triples.reserve(sts_triple_count(n));
  for (std::size_t x = 0; x < t; ++x) {
    triples.push_back(make_triple(at(x, 0), at(x, 1), at(x, 2)));
    for (std::size_t i = 0; i < 3; ++i) triples.push_back(make_triple(0, at(x + t, i), at(x, i + 1)));
  }
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = x + 1; y < q; ++y) {
      for (std::size_t i = 0; i < 3; ++i) triples.push_back(make_triple(at(x, i), at(y, i), at(op(x, y), i + 1)));
    }
  }
  std::vector<std::string> names(n);
  names[0] = "inf";
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t i = 0; i < 3; ++i) names[1 + 3 * x + i] = pair_name(x, i);
  }
  return {TripleSystem(n, std::move(triples)), std::move(names)};
}

LabeledSystem steiner_system(std::size_t n) {
  if (n == 0) return {TripleSystem(0, {}), {}};
  if (n % 6 == 3) return bose(n);
  if (n % 6 == 1) return skolem(n);
  throw std::invalid_argument("no STS on " + std::to_string(n) + " points");
}

LabeledSystem pg_sts(unsigned d) {
  if (d < 1 || d > 24) throw std::invalid_argument("pg_sts dimension must be in [1, 24]");
  const std::size_t n = (std::size_t{1} << (d + 1)) - 1;
  std::vector<Triple> triples;
  triples.reserve(sts_triple_count(n));
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      std::size_t c = a ^ b;
      if (c > b) triples.push_back({pt(a - 1), pt(b - 1), pt(c - 1)});
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t p = 1; p <= n; ++p) {
    std::string bits(d + 1, '0');
    for (unsigned i = 0; i <= d; ++i) {
      if (p >> i & 1) bits[d - i] = '1';
    }
    names[p - 1] = bits;
  }
  return {TripleSystem(n, std::move(triples)), std::move(names)};
}

LabeledSystem doubling(const LabeledSystem& y, const std::string& star_name) {
  const std::size_t n = y.system.size();
  const Point star = doubling_star(n);
  auto mirror = [n](Point p) { return pt(n + p); };
  std::vector<Triple> triples;
  triples.reserve(sts_triple_count(2 * n + 1));
  for (const Triple& t : y.system.triples()) {
    triples.push_back(t);
    triples.push_back(make_triple(mirror(t[0]), mirror(t[1]), t[2]));
    triples.push_back(make_triple(mirror(t[0]), t[1], mirror(t[2])));
    triples.push_back(make_triple(t[0], mirror(t[1]), mirror(t[2])));
  }
  for (Point p = 0; p < n; ++p) triples.push_back(make_triple(p, mirror(p), star));
  std::vector<std::string> names(2 * n + 1);
  for (std::size_t p = 0; p < n; ++p) {
    names[p] = y.names.at(p);
    names[n + p] = y.names.at(p) + "_1";
  }
  names[star] = star_name;
  return {TripleSystem(2 * n + 1, std::move(triples)), std::move(names)};
}

LabeledSystem doubling(const TripleSystem& y) { return doubling(with_index_names(y)); }

LabeledSystem direct_product(const LabeledSystem& a, const LabeledSystem& b) {
  const std::size_t na = a.system.size();
  const std::size_t nb = b.system.size();
  auto at = [nb](Point x, Point y) { return pt(x * nb + y); };
  std::vector<Triple> triples;
  triples.reserve(sts_triple_count(na * nb));
  for (Point x = 0; x < na; ++x) {
    for (const Triple& t : b.system.triples()) triples.push_back(make_triple(at(x, t[0]), at(x, t[1]), at(x, t[2])));
  }
  for (Point y = 0; y < nb; ++y) {
    for (const Triple& t : a.system.triples()) triples.push_back(make_triple(at(t[0], y), at(t[1], y), at(t[2], y)));
  }
  static constexpr std::array<std::array<int, 3>, 6> kOrders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (const Triple& s : a.system.triples()) {
    for (const Triple& t : b.system.triples()) {
      for (const auto& o : kOrders) {
        triples.push_back(make_triple(at(s[0], t[o[0]]), at(s[1], t[o[1]]), at(s[2], t[o[2]])));
      }
    }
  }
  std::vector<std::string> names(na * nb);
  for (Point x = 0; x < na; ++x) {
    for (Point y = 0; y < nb; ++y) names[at(x, y)] = "(" + a.names.at(x) + "," + b.names.at(y) + ")";
  }
  return {TripleSystem(na * nb, std::move(triples)), std::move(names)};
}

LabeledSystem direct_product(const TripleSystem& a, const TripleSystem& b) {
  return direct_product(with_index_names(a), with_index_names(b));
}

}  // namespace sts
