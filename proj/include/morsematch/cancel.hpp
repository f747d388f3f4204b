#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morsematch/field.hpp"
#include "morsematch/paths.hpp"

namespace morsematch {

// ask to make beta and alpha non-critical by reversing the unique V-path
// from a facet of beta down to alpha
struct CancelRequest {
    CellRef beta;   // critical, dimension d+1
    CellRef alpha;  // critical, dimension d
};

struct CancelRejection {
    enum class Kind { NotCritical, DimensionMismatch, PathCount, Permutation };
    Kind kind;
    int request_index = -1;                 // offending request, -1 for set-wide failures
    long long path_count = -1;              // set for PathCount rejections
    std::vector<int> witness_permutation;   // set for Permutation rejections
    std::string message;
};

struct CancelOutcome {
    std::optional<DiscreteVectorField> field;  // engaged exactly when accepted
    std::optional<CancelRejection> rejection;

    bool ok() const { return field.has_value(); }
};

// Simultaneous cancellation of critical pairs. Accepts when each request has
// exactly one V-path from the facets of its beta to its alpha, and the path
// existence matrix between all requested betas and alphas admits no
// non-identity permutation (checked exhaustively; at most 8 requests).
// On acceptance each path a_0, b_0, ..., a_t is reversed: pairs (a_i, b_i)
// are replaced by (a_{i+1}, b_i) and (a_0, beta) is added. The result is
// re-validated and re-checked for closed paths; a failure there is a
// std::logic_error, since the acceptance conditions rule it out.
CancelOutcome cancel_critical_pairs(const DiscreteVectorField& field,
                                    const std::vector<CancelRequest>& requests);

}  // namespace morsematch
