#include "sts/validate.hpp"

#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace sts {

void ValidationReport::add(std::string message) {
  if (violations.size() < kMaxListed) violations.push_back(std::move(message));
  ++violation_count;
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violation_count << " violation(s)";
  for (const auto& v : violations) os << "\n  " << v;
  if (violation_count > violations.size()) os << "\n  ...";
  return os.str();
}

namespace {

std::string pair_name(Point a, Point b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Marks every covered pair; reports pairs covered twice. Returns the bitset
// so the caller can look for uncovered pairs.
boost::dynamic_bitset<std::uint64_t> scan_pairs(const PartialTripleSystem& ts,
                                                ValidationReport& report) {
  const std::size_t n = ts.size();
  boost::dynamic_bitset<std::uint64_t> covered(n < 2 ? 0 : n * (n - 1) / 2);
  auto index = [](Point lo, Point hi) { return static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo; };
  for (const Triple& t : ts.triples()) {
    const std::pair<Point, Point> pairs[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
    for (auto [a, b] : pairs) {
      std::size_t i = index(a, b);
      if (covered.test(i)) {
        report.add("pair " + pair_name(a, b) + " covered twice");
      } else {
        covered.set(i);
      }
    }
  }
  return covered;
}

}  // namespace

ValidationReport validate_sts(const PartialTripleSystem& ts) {
  ValidationReport report;
  const std::size_t n = ts.size();
  if (!is_admissible_order(n)) {
    report.add("order " + std::to_string(n) + " is not 0, 1 or 3 (mod 6)");
  }
  if (ts.triples().size() != sts_triple_count(n)) {
    report.add("triple count " + std::to_string(ts.triples().size()) + " != n(n-1)/6 = " +
               std::to_string(sts_triple_count(n)));
  }
  auto covered = scan_pairs(ts, report);
  if (covered.count() != covered.size()) {
    for (Point b = 1; b < n; ++b) {
      for (Point a = 0; a < b; ++a) {
        if (!covered.test(static_cast<std::size_t>(b) * (b - 1) / 2 + a)) {
          report.add("pair " + pair_name(a, b) + " not covered");
        }
      }
    }
  }
  return report;
}

ValidationReport validate_pstss(const PartialTripleSystem& ps) {
  ValidationReport report;
  scan_pairs(ps, report);
  return report;
}

}  // namespace sts
