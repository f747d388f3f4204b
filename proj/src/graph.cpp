#include "morsematch/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsematch {

std::string vertex_name(VertexId v) {
    auto c = vertex_coord(v);
    return "v(" + std::to_string(c.level) + "," + std::to_string(c.slot) + ")";
}

std::array<int, 4> edge_label(Edge e) {
    auto ca = vertex_coord(e.a), cb = vertex_coord(e.b);
    return {ca.level, ca.slot, cb.level, cb.slot};
}

std::string edge_name(Edge e) {
    return vertex_name(e.a) + "-" + vertex_name(e.b);
}

int Graph::edge_index(VertexId u, VertexId v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return -1;
    return static_cast<int>(it - edges.begin());
}

bool Graph::is_complete() const {
    return static_cast<long long>(edges.size()) ==
           static_cast<long long>(n_vertices) * (n_vertices - 1) / 2;
}

Graph build_complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g;
    g.n_vertices = n;
    g.edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.edges.push_back({u, v});
    return g;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_vertices = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        g.edges.push_back(make_edge(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw std::invalid_argument("duplicate edge rejected");
    return g;
}

}  // namespace morsematch
