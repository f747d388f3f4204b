#pragma once

#include <cstdint>
#include <vector>

#include "morsematch/field.hpp"

namespace morsematch {

// Alternating cell sequence a_0, b_0, a_1, b_1, ..., b_{k-1}, a_k where the
// a's have dimension dim, each (a_i, b_i) is a field pair and a_{i+1} is a
// facet of b_i different from a_i. The trivial path is a single cell.
// The multiplicity is the product over i of -<b_i,a_i><b_i,a_{i+1}>.
struct GradientPath {
    int dim = 0;
    std::vector<CellIndex> cells;  // odd length 2k+1
    int multiplicity = 1;
};

// recomputes the sign from incidence numbers; throws std::invalid_argument
// when the sequence is not a structurally valid path in the complex
int path_multiplicity(const MatchingComplex& cx, const GradientPath& path);

// true when every (a_i, b_i) step uses a pair of this field
bool is_field_path(const DiscreteVectorField& field, const GradientPath& path);

// all V-paths from source to target (same dimension), depth-first in
// ascending cell-index order, so the result is lexicographic by the visited
// index sequence; includes the trivial path when source == target
std::vector<GradientPath> paths_between(const DiscreteVectorField& field, int dim,
                                        CellIndex source, CellIndex target);

// every V-path that starts at a facet of eta and ends at a critical cell
// one dimension below eta; facet_sign is <eta, facet>
struct FacetPath {
    CellIndex facet = no_cell;
    std::int8_t facet_sign = 0;
    GradientPath path;
};

std::vector<FacetPath> paths_from_critical_cofaces(const DiscreteVectorField& field, CellRef eta);

}  // namespace morsematch
