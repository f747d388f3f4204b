#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "morsematch/complex.hpp"
#include "morsematch/field.hpp"

namespace morsematch {

// V_1, ..., V_ceil(n/3): consecutive vertex triples, the last level holding
// the one or two leftover vertices when 3 does not divide n
struct LevelPartition {
    int n = 0;
    std::vector<std::vector<VertexId>> levels;

    int full_levels() const { return n / 3; }
};

LevelPartition build_level_partition(int n);  // throws for n < 5

// What the level sweep did, stage by stage. Stage i handles level i; when
// n = 3m+2 a tail stage m+1 handles the two leftover vertices (its pairs
// land in cover_none, the predicate being "covers neither").
struct FieldBuildTrace {
    struct Stage {
        std::vector<std::pair<CellRef, CellRef>> cover_one;   // source covers one vertex of V_i
        std::vector<std::pair<CellRef, CellRef>> cover_none;  // source covers none of V_i
    };
    std::vector<Stage> stages;
    // 1-based stage that consumed each cell, 0 = still unpaired after the
    // sweep; the vertex-disjoint 0-cell on the first level's second and
    // third vertices is consumed at stage 1 without a stored partner
    std::vector<std::vector<std::int16_t>> consumed_at;

    // membership in U_k, the pool surviving stages 1..k
    bool in_unpaired_set(CellRef c, int k) const {
        std::int16_t s = consumed_at[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)];
        return s == 0 || s > k;
    }
};

enum class ScanOrder { ascending, descending };

// The level-sweep gradient field on the matching complex of K_n, n >= 5:
// stage i pairs each surviving matching covering exactly one vertex of V_i
// with its extension by the edge on the other two, and each matching
// covering none of V_i with its extension by the second-third edge; for
// n = 3m+2 a final stage pairs whatever covers neither leftover vertex with
// its extension by the leftover edge. The scan order never changes the
// resulting pair set; the knob exists so tests can prove that.
std::pair<DiscreteVectorField, FieldBuildTrace> build_field_M(
    const MatchingComplex& cx, ScanOrder order = ScanOrder::ascending);

// Even n >= 6: additionally pairs every unpaired top cell (a perfect
// matching, necessarily all cross-edges) with its facet dropping the edge
// at the first vertex of the last level. Acyclicity is re-checked on the
// result rather than assumed.
DiscreteVectorField extend_to_M_circ(const DiscreteVectorField& field_m);

// n = 3m+1, n >= 7: additionally pairs every unpaired 1-cell made of two
// V1-V2 cross-edges with its extension by the edge from the uncovered V1
// vertex to the last level's vertex. May add nothing for larger n.
DiscreteVectorField extend_to_M_star(const DiscreteVectorField& field_m);

// The refinement of the starred field on the 7-vertex complex: cancels the
// two critical pairs (eta1, sigma4) and (eta2, sigma3), leaving critical
// counts (1, 2, 22).
DiscreteVectorField build_field_M_double_star(const MatchingComplex& cx);

// largest d such that every unpaired cell of the sweep other than the one
// 0-cell has dimension at least d; equals floor((n+1)/3) - 1
int connectivity_bound(int n);

// distinguished cells of the 7-vertex complex by their customary names:
// "xi" (the special 0-cell), "sigma1".."sigma4" (the four 1-cells left
// unpaired by the starred field), "eta1".."eta3" (three named 2-cells)
CellRef named_cell(const MatchingComplex& cx, std::string_view name);

}  // namespace morsematch
