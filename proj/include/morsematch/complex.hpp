#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "morsematch/graph.hpp"
#include "morsematch/matrix.hpp"

namespace morsematch {

using EdgeId = std::int32_t;
using CellIndex = std::int32_t;
inline constexpr CellIndex no_cell = -1;

// (dimension, index within dimension); the universal cell address
struct CellRef {
    int dim = 0;
    CellIndex index = no_cell;

    friend bool operator==(const CellRef&, const CellRef&) = default;
    friend auto operator<=>(const CellRef&, const CellRef&) = default;
};

// The complex of all matchings of a graph: a k-cell is a set of k+1 pairwise
// disjoint edges, stored as its ascending edge-id sequence. Within each
// dimension cells are sorted lexicographically by that sequence, and the
// position in this order is the cell's index. The empty matching is not
// stored. Face and coface adjacency is precomputed with incidence signs:
// dropping the i-th edge (0-based in sorted order) carries sign (-1)^i.
class MatchingComplex {
public:
    struct Face {
        CellIndex index = no_cell;
        std::int8_t sign = 0;
    };

    const Graph& graph() const { return graph_; }
    int dim() const { return static_cast<int>(cells_.size()) - 1; }

    CellIndex size(int k) const {
        if (k < 0 || k > dim()) return 0;
        return counts_[static_cast<std::size_t>(k)];
    }
    long long total_cells() const;
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;

    std::span<const EdgeId> cell(int k, CellIndex i) const;
    std::string cell_name(int k, CellIndex i) const;  // "{v(1,2)-v(2,3), ...}"
    CellIndex find(int k, std::span<const EdgeId> edges) const;

    // facets of a k-cell (k+1 of them, deletion order) and cofacets
    std::span<const Face> facets(int k, CellIndex i) const;
    std::span<const Face> cofacets(int k, CellIndex i) const;

    SparseIntMatrix boundary_matrix(int k) const;  // rows: (k-1)-cells, cols: k-cells

    friend MatchingComplex build_matching_complex(const Graph& g);

private:
    Graph graph_;
    std::vector<std::vector<EdgeId>> cells_;  // flat: (k+1)*count edge ids per dim
    std::vector<CellIndex> counts_;
    std::vector<std::vector<Face>> facets_;         // flat, (k+1) per cell, deletion order
    std::vector<std::vector<Face>> cofacets_;       // CSR payload
    std::vector<std::vector<std::int64_t>> cofacet_offsets_;
};

MatchingComplex build_matching_complex(const Graph& g);

// Number of k-edge matchings of K_n for each k >= 1, as a closed form:
// choose(n, 2k) * (2k-1)!!. Exact in 64-bit for n <= 20.
std::vector<long long> complete_graph_f_vector(int n);

// <beta, alpha>: 0 unless alpha is beta minus its i-th edge, else (-1)^i.
// Throws when the lengths do not differ by exactly one.
int incidence_number(std::span<const EdgeId> beta, std::span<const EdgeId> alpha);

}  // namespace morsematch
