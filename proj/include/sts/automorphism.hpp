#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sts/permutation.hpp"
#include "sts/permutation_group.hpp"
#include "sts/triple_system.hpp"

namespace sts {

struct SearchOptions {
  // Refinement nodes allowed per call before BudgetExceeded is thrown.
  std::uint64_t node_budget = 100'000'000;
};

// Reads STS_NODE_BUDGET from the environment when set.
SearchOptions search_options_from_env();

// Coarsest stable partition reachable from the unit partition by iterated
// refinement on "pairs of cells met by the triples through a point".
// Cells are label-invariant in order; points inside a cell are ascending.
std::vector<std::vector<Point>> refined_partition(const PartialTripleSystem& ts);

// Exact automorphism group via individualization/refinement backtracking.
// Throws BudgetExceeded.
PermutationGroup automorphism_group(const PartialTripleSystem& ts, const SearchOptions& options = {});

struct CanonicalForm {
  std::size_t n = 0;
  std::vector<Triple> triples;  // sorted, over canonical labels
  Permutation labeling;         // original point -> canonical label

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.triples == b.triples;
  }
};

// Two systems get equal forms iff they are isomorphic. Throws BudgetExceeded.
CanonicalForm canonical_form(const PartialTripleSystem& ts, const SearchOptions& options = {});

struct IsoCertificate {
  std::optional<Permutation> map;  // a -> b, verified triple-to-triple
  std::string reason;              // why not, when map is empty
  std::vector<Triple> form_a;      // canonical forms when they were computed
  std::vector<Triple> form_b;

  bool isomorphic() const { return map.has_value(); }
};

IsoCertificate are_isomorphic(const PartialTripleSystem& a, const PartialTripleSystem& b,
                              const SearchOptions& options = {});

}  // namespace sts
