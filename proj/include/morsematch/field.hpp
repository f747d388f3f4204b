#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morsematch/complex.hpp"

namespace morsematch {

// A pairing of cells with cofacets one dimension up, each cell in at most
// one pair. Pairs are collected as raw (source, target) references so that
// malformed inputs can be represented and then diagnosed by validate_field;
// partner lookup tables are compiled on first validated use.
class DiscreteVectorField {
public:
    explicit DiscreteVectorField(const MatchingComplex& cx);

    const MatchingComplex& complex() const { return *cx_; }
    const std::vector<std::pair<CellRef, CellRef>>& pairs() const { return pairs_; }
    std::size_t num_pairs() const { return pairs_.size(); }

    // records (src, dst); only index-range errors are rejected here
    void add_pair(CellRef src, CellRef dst);

    // partner queries; these compile the lookup tables and throw
    // std::invalid_argument when the pair list is not a valid field
    CellIndex partner_up(int dim, CellIndex i) const;    // no_cell if none
    CellIndex partner_down(int dim, CellIndex i) const;  // no_cell if none
    bool is_critical(int dim, CellIndex i) const;

private:
    const MatchingComplex* cx_;
    std::vector<std::pair<CellRef, CellRef>> pairs_;
    mutable bool compiled_ = false;
    mutable std::vector<std::vector<CellIndex>> up_, down_;

    void ensure_compiled() const;
    friend std::optional<struct FieldViolation> validate_field(const DiscreteVectorField&);
};

struct FieldViolation {
    enum class Kind { IndexRange, DimensionGap, NotAFace, DoublyMatched };
    Kind kind;
    CellRef a, b;         // the offending pair
    std::string message;  // human-readable description
};

// checks the discrete-vector-field conditions; reports the first violation
// in pair-insertion order, or nullopt when the field is well-formed
std::optional<FieldViolation> validate_field(const DiscreteVectorField& field);

// a nontrivial closed V-path: alternating cells a_0, b_0, a_1, ..., b_{t-1},
// a_t with a_t = a_0, all a's of dimension dim
struct ClosedPath {
    int dim = 0;
    std::vector<CellIndex> cells;
};

// cycle detection on the directed graph with arcs a -> a' for each pair
// (a, b) and facet a' != a of b; iterative three-color depth-first search
std::optional<ClosedPath> check_acyclic(const DiscreteVectorField& field);

struct CriticalReport {
    std::vector<std::vector<CellIndex>> cells;  // per dimension, ascending

    std::vector<long long> counts() const {
        std::vector<long long> out;
        out.reserve(cells.size());
        for (const auto& c : cells) out.push_back(static_cast<long long>(c.size()));
        return out;
    }
};

CriticalReport critical_simplices(const DiscreteVectorField& field);

}  // namespace morsematch
