#pragma once

#include <string>

#include "morsematch/complex.hpp"
#include "morsematch/field.hpp"
#include "morsematch/morse.hpp"

namespace morsematch {

// Dense CSV of the boundary map from k-cells to (k-1)-cells: header row of
// column cell indices after a leading empty cell, then one labelled row per
// (k-1)-cell. Desk-scale sizes only.
std::string boundary_csv(const MatchingComplex& cx, int k);

// Same layout for the critical-cell boundary, with quoted cell names as the
// row and column labels.
std::string morse_boundary_csv(const MatchingComplex& cx, const MorseComplex& mc, int k);

// The V-path family below one critical cell as a directed graph: face arcs
// solid and labelled with the incidence sign, pairing arcs dashed, critical
// endpoints drawn with a double border.
std::string paths_dot(const DiscreteVectorField& field, CellRef from_critical);

}  // namespace morsematch
