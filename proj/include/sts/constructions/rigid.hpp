#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sts/automorphism.hpp"
#include "sts/triple_system.hpp"

namespace sts {

// An STS(n) from the triple-switching hill climb: extend by
// a random triple through a deficient point, evicting the triple that
// already covers the third pair when there is one.
TripleSystem hill_climb_sts(std::size_t n, std::mt19937_64& rng);

struct RigidSearchResult {
  TripleSystem system;
  std::size_t attempts = 0;
};

// Draws systems from hill_climb_sts until one has trivial automorphism
// group. Requires an admissible n >= 15; throws NotFound after
// max_attempts draws.
RigidSearchResult rigid_sts_search(std::size_t n, std::uint64_t seed = 0, std::size_t max_attempts = 1000,
                                   const SearchOptions& options = {});

}  // namespace sts
