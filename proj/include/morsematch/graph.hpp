#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace morsematch {

using VertexId = int;

// Vertices of K_n are grouped into levels of three: vertex ids 0,1,2 form
// level 1, ids 3,4,5 level 2, and so on; the last level holds n mod 3
// vertices when n is not a multiple of 3.  A vertex is addressed either by
// its flat id or by the 1-based (level, slot) coordinate.
struct VertexCoord {
    int level = 0;
    int slot = 0;

    friend bool operator==(const VertexCoord&, const VertexCoord&) = default;
};

inline VertexCoord vertex_coord(VertexId v) { return {v / 3 + 1, v % 3 + 1}; }
inline VertexId vertex_at(int level, int slot) { return 3 * (level - 1) + (slot - 1); }

std::string vertex_name(VertexId v);  // "v(level,slot)"

struct Edge {
    VertexId a = 0;  // a < b always
    VertexId b = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Canonical label of an edge: the (level, slot) coordinates of both ends,
// lower end first.  Because vertex ids increase with (level, slot), the
// lexicographic order on labels coincides with the order on (a, b) pairs.
std::array<int, 4> edge_label(Edge e);
std::string edge_name(Edge e);  // "v(1,2)-v(2,3)"

inline bool is_cross_edge(Edge e) {
    return vertex_coord(e.a).level != vertex_coord(e.b).level;
}

// A finite simple graph; edges are kept sorted so their positions double as
// canonical edge ids.
struct Graph {
    int n_vertices = 0;
    std::vector<Edge> edges;

    // index of {u,v} in the canonical order, or -1
    int edge_index(VertexId u, VertexId v) const;
    bool is_complete() const;
};

Graph build_complete_graph(int n);
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace morsematch
