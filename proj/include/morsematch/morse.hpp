#pragma once

#include <optional>
#include <string>
#include <vector>

#include "morsematch/field.hpp"
#include "morsematch/homology.hpp"
#include "morsematch/matrix.hpp"
#include "morsematch/paths.hpp"

namespace morsematch {

// Chain complex on the critical cells of an acyclic field. boundary[k]
// (1 <= k <= dim) maps dimension-k critical cells to dimension-(k-1) ones;
// rows/columns are indexed by position in critical[k-1] / critical[k].
// Entry (s, t) sums, over all facets f of critical cell t and all V-paths
// from f to critical cell s, the product <t, f> * multiplicity.
struct MorseComplex {
    std::vector<std::vector<CellIndex>> critical;  // per dimension, ascending
    std::vector<SparseIntMatrix> boundary;         // boundary[0] unused (empty)

    std::vector<long long> dims() const {
        std::vector<long long> out;
        out.reserve(critical.size());
        for (const auto& c : critical) out.push_back(static_cast<long long>(c.size()));
        return out;
    }
};

MorseComplex build_morse_complex(const DiscreteVectorField& field);

// homology computed through the critical-cell complex of the field
HomologyResult morse_homology(const DiscreteVectorField& field);

// single boundary entry n(tau, sigma); both cells must be critical with
// dim(tau) = dim(sigma) + 1
long long morse_boundary_coefficient(const DiscreteVectorField& field, CellRef tau, CellRef sigma);

// Alternative evaluation of the dimension-2 boundary of a critical 2-cell:
// enumerate the paths explicitly and give each the sign (-1)^(r+s), where r
// counts the -1 incidence labels along the path (the <eta, a_0> label
// included) and s counts the upper cells the path passes through. Returns
// (critical 1-cell, coefficient) pairs, ascending by cell, zeros dropped.
// Must agree with morse_boundary_coefficient on every input.
std::vector<std::pair<CellIndex, long long>> sign_scheme_boundary(const DiscreteVectorField& field,
                                                                  CellRef eta);

struct MorseInequalityViolation {
    std::string which;  // "weak" | "strong" | "alternating-sum"
    int index = -1;     // failing dimension, -1 for the global sum
};

// weak inequalities m_i >= b_i, strong alternating partial sums, and the
// exact alternating-sum identity; counts and homology must describe the
// same complex
std::optional<MorseInequalityViolation> verify_morse_inequalities(
    const std::vector<long long>& critical_counts, const HomologyResult& homology);

}  // namespace morsematch
