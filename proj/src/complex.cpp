#include "morsematch/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsematch {

namespace {

// lexicographic compare of the cell at position i against a key sequence
int compare_cell(const std::vector<EdgeId>& flat, int width, CellIndex i,
                 std::span<const EdgeId> key) {
    const EdgeId* p = flat.data() + static_cast<std::size_t>(i) * width;
    for (int t = 0; t < width; ++t) {
        if (p[t] != key[static_cast<std::size_t>(t)]) return p[t] < key[static_cast<std::size_t>(t)] ? -1 : 1;
    }
    return 0;
}

}  // namespace

long long MatchingComplex::total_cells() const {
    long long t = 0;
    for (CellIndex c : counts_) t += c;
    return t;
}

std::vector<long long> MatchingComplex::f_vector() const {
    return {counts_.begin(), counts_.end()};
}

long long MatchingComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < counts_.size(); ++k)
        chi += (k % 2 == 0) ? counts_[k] : -counts_[k];
    return chi;
}

std::span<const EdgeId> MatchingComplex::cell(int k, CellIndex i) const {
    if (k < 0 || k > dim() || i < 0 || i >= size(k))
        throw std::out_of_range("cell reference out of range");
    return {cells_[static_cast<std::size_t>(k)].data() + static_cast<std::size_t>(i) * (k + 1),
            static_cast<std::size_t>(k + 1)};
}

std::string MatchingComplex::cell_name(int k, CellIndex i) const {
    auto c = cell(k, i);
    std::string out = "{";
    for (std::size_t t = 0; t < c.size(); ++t) {
        if (t) out += ", ";
        out += edge_name(graph_.edges[static_cast<std::size_t>(c[t])]);
    }
    out += "}";
    return out;
}

CellIndex MatchingComplex::find(int k, std::span<const EdgeId> key) const {
    if (k < 0 || k > dim()) return no_cell;
    if (static_cast<int>(key.size()) != k + 1)
        throw std::invalid_argument("key length does not match dimension");
    const auto& flat = cells_[static_cast<std::size_t>(k)];
    CellIndex lo = 0, hi = size(k);
    while (lo < hi) {
        CellIndex mid = lo + (hi - lo) / 2;
        if (compare_cell(flat, k + 1, mid, key) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size(k) && compare_cell(flat, k + 1, lo, key) == 0) return lo;
    return no_cell;
}

std::span<const MatchingComplex::Face> MatchingComplex::facets(int k, CellIndex i) const {
    if (k < 1 || k > dim() || i < 0 || i >= size(k)) return {};
    return {facets_[static_cast<std::size_t>(k)].data() + static_cast<std::size_t>(i) * (k + 1),
            static_cast<std::size_t>(k + 1)};
}

std::span<const MatchingComplex::Face> MatchingComplex::cofacets(int k, CellIndex i) const {
    if (k < 0 || k >= dim() || i < 0 || i >= size(k)) return {};
    const auto& off = cofacet_offsets_[static_cast<std::size_t>(k)];
    auto lo = off[static_cast<std::size_t>(i)], hi = off[static_cast<std::size_t>(i) + 1];
    return {cofacets_[static_cast<std::size_t>(k)].data() + lo, static_cast<std::size_t>(hi - lo)};
}

SparseIntMatrix MatchingComplex::boundary_matrix(int k) const {
    if (k < 1) throw std::invalid_argument("boundary matrix needs k >= 1");
    SparseIntMatrix m(size(k - 1), size(k));
    for (CellIndex j = 0; j < size(k); ++j) {
        auto fs = facets(k, j);
        auto& col = m.columns[static_cast<std::size_t>(j)];
        col.reserve(fs.size());
        for (auto f : fs) col.push_back({f.index, f.sign});
        std::sort(col.begin(), col.end());
    }
    return m;
}

MatchingComplex build_matching_complex(const Graph& g) {
    MatchingComplex cx;
    cx.graph_ = g;
    const int ne = static_cast<int>(g.edges.size());

    // enumerate matchings dimension by dimension, extending each cell by
    // disjoint edges of larger id; this emits every dimension lex-sorted
    std::vector<EdgeId> cur;  // dim 0
    cur.reserve(static_cast<std::size_t>(ne));
    for (EdgeId e = 0; e < ne; ++e) cur.push_back(e);
    int k = 0;
    while (!cur.empty()) {
        cx.cells_.push_back(cur);
        cx.counts_.push_back(static_cast<CellIndex>(cur.size() / static_cast<std::size_t>(k + 1)));
        std::vector<EdgeId> nxt;
        std::vector<char> used(static_cast<std::size_t>(g.n_vertices), 0);
        const CellIndex cnt = cx.counts_.back();
        for (CellIndex i = 0; i < cnt; ++i) {
            const EdgeId* c = cur.data() + static_cast<std::size_t>(i) * (k + 1);
            for (int t = 0; t <= k; ++t) {
                used[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(c[t])].a)] = 1;
                used[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(c[t])].b)] = 1;
            }
            for (EdgeId e = c[k] + 1; e < ne; ++e) {
                if (!used[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].a)] &&
                    !used[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].b)]) {
                    nxt.insert(nxt.end(), c, c + k + 1);
                    nxt.push_back(e);
                }
            }
            for (int t = 0; t <= k; ++t) {
                used[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(c[t])].a)] = 0;
                used[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(c[t])].b)] = 0;
            }
        }
        cur = std::move(nxt);
        ++k;
    }

    // facet links with deletion signs, then invert into cofacet lists
    cx.facets_.resize(cx.cells_.size());
    cx.cofacets_.resize(cx.cells_.size());
    cx.cofacet_offsets_.resize(cx.cells_.size());
    for (int d = 1; d <= cx.dim(); ++d) {
        auto& flist = cx.facets_[static_cast<std::size_t>(d)];
        flist.resize(static_cast<std::size_t>(cx.size(d)) * (d + 1));
        std::vector<EdgeId> key(static_cast<std::size_t>(d));
        std::vector<std::int64_t> degree(static_cast<std::size_t>(cx.size(d - 1)), 0);
        for (CellIndex i = 0; i < cx.size(d); ++i) {
            auto c = cx.cell(d, i);
            for (int drop = 0; drop <= d; ++drop) {
                int w = 0;
                for (int t = 0; t <= d; ++t)
                    if (t != drop) key[static_cast<std::size_t>(w++)] = c[static_cast<std::size_t>(t)];
                CellIndex f = cx.find(d - 1, key);
                if (f == no_cell) throw std::logic_error("missing facet; enumeration broken");
                flist[static_cast<std::size_t>(i) * (d + 1) + static_cast<std::size_t>(drop)] =
                    {f, static_cast<std::int8_t>(drop % 2 == 0 ? 1 : -1)};
                ++degree[static_cast<std::size_t>(f)];
            }
        }
        auto& off = cx.cofacet_offsets_[static_cast<std::size_t>(d - 1)];
        off.assign(static_cast<std::size_t>(cx.size(d - 1)) + 1, 0);
        for (CellIndex f = 0; f < cx.size(d - 1); ++f)
            off[static_cast<std::size_t>(f) + 1] = off[static_cast<std::size_t>(f)] + degree[static_cast<std::size_t>(f)];
        auto& clist = cx.cofacets_[static_cast<std::size_t>(d - 1)];
        clist.resize(static_cast<std::size_t>(off.back()));
        std::vector<std::int64_t> cursor(off.begin(), off.end() - 1);
        for (CellIndex i = 0; i < cx.size(d); ++i) {
            for (int drop = 0; drop <= d; ++drop) {
                auto fe = flist[static_cast<std::size_t>(i) * (d + 1) + static_cast<std::size_t>(drop)];
                clist[static_cast<std::size_t>(cursor[static_cast<std::size_t>(fe.index)]++)] = {i, fe.sign};
            }
        }
    }
    if (cx.dim() >= 0) cx.cofacet_offsets_[static_cast<std::size_t>(cx.dim())]
        .assign(static_cast<std::size_t>(cx.size(cx.dim())) + 1, 0);
    return cx;
}

std::vector<long long> complete_graph_f_vector(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("supported range is 0 <= n <= 20");
    std::vector<long long> f;
    for (int k = 1; 2 * k <= n; ++k) {
        // choose(n, 2k) * (2k-1)!!
        long long c = 1;
        for (int t = 1; t <= 2 * k; ++t) c = c * (n - 2 * k + t) / t;
        long long dbl = 1;
        for (int t = 3; t <= 2 * k - 1; t += 2) dbl *= t;
        f.push_back(c * dbl);
    }
    return f;
}

int incidence_number(std::span<const EdgeId> beta, std::span<const EdgeId> alpha) {
    if (beta.size() != alpha.size() + 1)
        throw std::invalid_argument("incidence number needs consecutive dimensions");
    // alpha must equal beta with one position dropped; find the first mismatch
    std::size_t i = 0;
    while (i < alpha.size() && beta[i] == alpha[i]) ++i;
    for (std::size_t t = i; t < alpha.size(); ++t)
        if (beta[t + 1] != alpha[t]) return 0;
    return i % 2 == 0 ? 1 : -1;
}

}  // namespace morsematch
