#pragma once

#include <cstdint>

#include "morsematch/field.hpp"

namespace morsematch {

// One greedy attempt at a random field: visit cells in shuffled order and
// pair each still-free cell with a random still-free cofacet, skipping the
// cell with probability 1 - density. The attempt may come out cyclic; the
// flag reports whether it survived the closed-path check.
struct RandomFieldResult {
    DiscreteVectorField field;
    bool acyclic = false;
};

RandomFieldResult random_discrete_field(const MatchingComplex& cx, std::uint64_t seed,
                                        double density);

// repeats attempts with varying density until one is acyclic; throws
// std::runtime_error when max_attempts attempts all fail
DiscreteVectorField random_acyclic_field(const MatchingComplex& cx, std::uint64_t seed,
                                         int max_attempts = 64);

}  // namespace morsematch
