#include "morsematch/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "morsematch/cancel.hpp"

namespace morsematch {

namespace {

void require_complete(const MatchingComplex& cx, int min_n, const char* what) {
    const Graph& g = cx.graph();
    if (!g.is_complete())
        throw std::invalid_argument(std::string(what) + " is defined on complete graphs only");
    if (g.n_vertices < min_n)
        throw std::invalid_argument(std::string(what) + " needs at least " +
                                    std::to_string(min_n) + " vertices");
}

std::uint32_t covered_mask(const MatchingComplex& cx, int k, CellIndex i) {
    std::uint32_t mask = 0;
    for (EdgeId e : cx.cell(k, i)) {
        const Edge& ed = cx.graph().edges[static_cast<std::size_t>(e)];
        mask |= (1u << ed.a) | (1u << ed.b);
    }
    return mask;
}

// cell + one disjoint edge, by index
CellIndex extend_cell(const MatchingComplex& cx, int k, CellIndex i, EdgeId extra) {
    auto base = cx.cell(k, i);
    std::vector<EdgeId> edges(base.begin(), base.end());
    edges.insert(std::upper_bound(edges.begin(), edges.end(), extra), extra);
    CellIndex out = cx.find(k + 1, edges);
    if (out == no_cell) throw std::logic_error("extension by a disjoint edge is not a cell");
    return out;
}

}  // namespace

LevelPartition build_level_partition(int n) {
    if (n < 5) throw std::invalid_argument("level partition needs n >= 5");
    LevelPartition out;
    out.n = n;
    for (int v = 0; v < n; v += 3) {
        std::vector<VertexId> level;
        for (int w = v; w < std::min(v + 3, n); ++w) level.push_back(w);
        out.levels.push_back(std::move(level));
    }
    return out;
}

std::pair<DiscreteVectorField, FieldBuildTrace> build_field_M(const MatchingComplex& cx,
                                                              ScanOrder order) {
    require_complete(cx, 5, "the level-sweep field");
    const int n = cx.graph().n_vertices;
    const int m = n / 3;

    DiscreteVectorField field(cx);
    FieldBuildTrace trace;
    trace.consumed_at.resize(static_cast<std::size_t>(cx.dim()) + 1);
    for (int k = 0; k <= cx.dim(); ++k)
        trace.consumed_at[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(cx.size(k)), 0);

    auto consumed = [&](int k, CellIndex i) -> std::int16_t& {
        return trace.consumed_at[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    };

    // the 0-cell on the first level's second and third vertices is consumed
    // up front (its partner, the empty matching, is not stored), so it stays
    // critical without ever entering a stage
    int xi_edge = cx.graph().edge_index(vertex_at(1, 2), vertex_at(1, 3));
    consumed(0, xi_edge) = 1;

    const int total_stages = m + (n % 3 == 2 ? 1 : 0);
    for (int stage = 1; stage <= total_stages; ++stage) {
        const bool tail = stage > m;  // the two-vertex leftover level of n = 3m+2
        std::uint32_t level_mask = 0;
        for (int s = 1; s <= (tail ? 2 : 3); ++s) level_mask |= 1u << vertex_at(stage, s);

        FieldBuildTrace::Stage st;
        auto visit = [&](int k, CellIndex i) {
            if (consumed(k, i) != 0) return;
            std::uint32_t cov = covered_mask(cx, k, i) & level_mask;
            EdgeId extra;
            bool one_covered;
            if (tail) {
                if (cov != 0) return;
                one_covered = false;
                extra = cx.graph().edge_index(vertex_at(stage, 1), vertex_at(stage, 2));
            } else if (cov == 0) {
                one_covered = false;
                extra = cx.graph().edge_index(vertex_at(stage, 2), vertex_at(stage, 3));
            } else if ((cov & (cov - 1)) == 0) {
                one_covered = true;
                int s = vertex_coord(static_cast<VertexId>(std::countr_zero(cov))).slot;
                std::array<int, 2> rest{};
                int w = 0;
                for (int cand = 1; cand <= 3; ++cand)
                    if (cand != s) rest[static_cast<std::size_t>(w++)] = cand;
                extra = cx.graph().edge_index(vertex_at(stage, rest[0]), vertex_at(stage, rest[1]));
            } else {
                return;  // two or more vertices covered: a target, never a source
            }
            CellIndex up = extend_cell(cx, k, i, extra);
            if (consumed(k + 1, up) != 0)
                throw std::logic_error("level sweep tried to reuse a consumed cell");
            consumed(k, i) = static_cast<std::int16_t>(stage);
            consumed(k + 1, up) = static_cast<std::int16_t>(stage);
            field.add_pair({k, i}, {k + 1, up});
            (one_covered ? st.cover_one : st.cover_none).push_back({{k, i}, {k + 1, up}});
        };

        if (order == ScanOrder::ascending) {
            for (int k = 0; k <= cx.dim(); ++k)
                for (CellIndex i = 0; i < cx.size(k); ++i) visit(k, i);
        } else {
            for (int k = cx.dim(); k >= 0; --k)
                for (CellIndex i = cx.size(k) - 1; i >= 0; --i) visit(k, i);
        }
        trace.stages.push_back(std::move(st));
    }

    if (auto v = validate_field(field))
        throw std::logic_error("level sweep built an invalid field: " + v->message);
    if (check_acyclic(field))
        throw std::logic_error("level sweep built a field with a closed path");
    return {std::move(field), std::move(trace)};
}

DiscreteVectorField extend_to_M_circ(const DiscreteVectorField& field_m) {
    const MatchingComplex& cx = field_m.complex();
    require_complete(cx, 6, "the top-cell extension");
    const int n = cx.graph().n_vertices;
    if (n % 2 != 0) throw std::invalid_argument("the top-cell extension needs even n");

    const int last_level = (n + 2) / 3;
    const VertexId v_first = vertex_at(last_level, 1);
    const int top = cx.dim();

    DiscreteVectorField out(cx);
    for (const auto& [src, dst] : field_m.pairs()) out.add_pair(src, dst);

    CriticalReport crit = critical_simplices(field_m);
    for (CellIndex c : crit.cells[static_cast<std::size_t>(top)]) {
        EdgeId at_first = -1;
        for (EdgeId e : cx.cell(top, c)) {
            const Edge& ed = cx.graph().edges[static_cast<std::size_t>(e)];
            if (!is_cross_edge(ed))
                throw std::logic_error("unpaired top cell with a levelled edge");
            if (ed.a == v_first || ed.b == v_first) at_first = e;
        }
        if (at_first < 0) throw std::logic_error("top cell misses the last-level vertex");
        std::vector<EdgeId> rest;
        for (EdgeId e : cx.cell(top, c))
            if (e != at_first) rest.push_back(e);
        CellIndex src = cx.find(top - 1, rest);
        if (src == no_cell || !field_m.is_critical(top - 1, src))
            throw std::logic_error("top-cell extension source is not an unpaired cell");
        out.add_pair({top - 1, src}, {top, c});
    }

    if (auto v = validate_field(out))
        throw std::logic_error("top-cell extension broke the field: " + v->message);
    if (check_acyclic(out))
        throw std::logic_error("top-cell extension introduced a closed path");
    return out;
}

DiscreteVectorField extend_to_M_star(const DiscreteVectorField& field_m) {
    const MatchingComplex& cx = field_m.complex();
    require_complete(cx, 7, "the cross-pair extension");
    const int n = cx.graph().n_vertices;
    if (n % 3 != 1) throw std::invalid_argument("the cross-pair extension needs n = 3m+1");

    const int m = n / 3;
    const VertexId v_last = vertex_at(m + 1, 1);

    DiscreteVectorField out(cx);
    for (const auto& [src, dst] : field_m.pairs()) out.add_pair(src, dst);

    CriticalReport crit = critical_simplices(field_m);
    for (CellIndex c : crit.cells.at(1)) {
        bool both_v1_v2 = true;
        std::uint32_t covered = 0;
        for (EdgeId e : cx.cell(1, c)) {
            const Edge& ed = cx.graph().edges[static_cast<std::size_t>(e)];
            int la = vertex_coord(ed.a).level, lb = vertex_coord(ed.b).level;
            if (std::min(la, lb) != 1 || std::max(la, lb) != 2) both_v1_v2 = false;
            covered |= (1u << ed.a) | (1u << ed.b);
        }
        if (!both_v1_v2) continue;
        VertexId v_star = -1;
        for (int s = 1; s <= 3; ++s)
            if (!(covered & (1u << vertex_at(1, s)))) v_star = vertex_at(1, s);
        if (v_star < 0) throw std::logic_error("two cross edges cover all of the first level");
        EdgeId extra = cx.graph().edge_index(v_star, v_last);
        CellIndex up = extend_cell(cx, 1, c, extra);
        if (!field_m.is_critical(2, up))
            throw std::logic_error("cross-pair extension target is not an unpaired cell");
        out.add_pair({1, c}, {2, up});
    }

    if (auto v = validate_field(out))
        throw std::logic_error("cross-pair extension broke the field: " + v->message);
    if (check_acyclic(out))
        throw std::logic_error("cross-pair extension introduced a closed path");
    return out;
}

DiscreteVectorField build_field_M_double_star(const MatchingComplex& cx) {
    require_complete(cx, 7, "the cancellation refinement");
    if (cx.graph().n_vertices != 7)
        throw std::invalid_argument("the cancellation refinement is specific to n = 7");

    DiscreteVectorField star = extend_to_M_star(build_field_M(cx).first);
    std::vector<CancelRequest> requests{
        {named_cell(cx, "eta1"), named_cell(cx, "sigma4")},
        {named_cell(cx, "eta2"), named_cell(cx, "sigma3")},
    };
    CancelOutcome outcome = cancel_critical_pairs(star, requests);
    if (!outcome.ok())
        throw std::logic_error("refinement cancellation rejected: " + outcome.rejection->message);
    return std::move(*outcome.field);
}

int connectivity_bound(int n) {
    if (n < 1) throw std::invalid_argument("connectivity bound needs n >= 1");
    return (n + 1) / 3 - 1;
}

CellRef named_cell(const MatchingComplex& cx, std::string_view name) {
    struct Named {
        std::string_view name;
        std::vector<std::pair<int, int>> edges;
    };
    static const std::vector<Named> table{
        {"xi", {{1, 2}}},
        {"sigma1", {{0, 1}, {3, 4}}},
        {"sigma2", {{0, 1}, {3, 5}}},
        {"sigma3", {{0, 2}, {3, 4}}},
        {"sigma4", {{0, 2}, {3, 5}}},
        {"eta1", {{1, 4}, {2, 5}, {3, 6}}},
        {"eta2", {{0, 4}, {1, 3}, {5, 6}}},
        {"eta3", {{0, 5}, {1, 4}, {2, 3}}},
    };
    for (const Named& row : table) {
        if (row.name != name) continue;
        std::vector<EdgeId> ids;
        for (auto [u, v] : row.edges) {
            int e = cx.graph().edge_index(u, v);
            if (e < 0) throw std::invalid_argument("complex lacks the edges of " + std::string(name));
            ids.push_back(e);
        }
        std::sort(ids.begin(), ids.end());
        CellRef out{static_cast<int>(ids.size()) - 1, cx.find(static_cast<int>(ids.size()) - 1, ids)};
        if (out.index == no_cell)
            throw std::invalid_argument("complex has no cell named " + std::string(name));
        return out;
    }
    throw std::invalid_argument("unknown cell name: " + std::string(name));
}

}  // namespace morsematch
