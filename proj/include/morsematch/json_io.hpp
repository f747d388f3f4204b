#pragma once

#include <memory>
#include <string>

#include "morsematch/complex.hpp"
#include "morsematch/field.hpp"
#include "morsematch/homology.hpp"

namespace morsematch {

// {"n": int, "edges": [[u, v], ...]} in canonical edge order
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// {"simplices": {"0": [[edge ids], ...], "1": ...}}; cells appear in index
// order, so the position within a list is the cell index
std::string complex_to_json(const MatchingComplex& cx);

// {"construction": ..., "n": ..., "complex": {"complete": n} | inline graph,
// "pairs": [[dim, src, dst], ...]}; construction is omitted when empty
std::string field_to_json(const DiscreteVectorField& field, const std::string& construction = "");

// a field loaded from JSON together with the complex it lives on
struct LoadedField {
    std::unique_ptr<MatchingComplex> complex;  // owns the field's home
    DiscreteVectorField field;
    std::string construction;  // "" when the file named none
};

// parses, rebuilds the complex, and validates the pairing; malformed input
// and invalid fields both raise std::invalid_argument
LoadedField field_from_json(const std::string& text);

// {"dims": [...], "betti": [...], "torsion": [[...], ...]}
std::string homology_to_json(const HomologyResult& h);

}  // namespace morsematch
