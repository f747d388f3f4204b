#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "morsematch/complex.hpp"
#include "morsematch/matrix.hpp"

using namespace morsematch;

static MatchingComplex complete(int n) {
    return build_matching_complex(build_complete_graph(n));
}

TEST_CASE("vertex coordinates round-trip") {
    CHECK(vertex_at(1, 1) == 0);
    CHECK(vertex_at(2, 3) == 5);
    CHECK(vertex_coord(4) == VertexCoord{2, 2});
    for (VertexId v = 0; v < 12; ++v) {
        auto c = vertex_coord(v);
        CHECK(vertex_at(c.level, c.slot) == v);
    }
    CHECK(vertex_name(7) == "v(3,2)");
}

TEST_CASE("edges are canonically ordered and indexed") {
    Graph g = build_complete_graph(5);
    CHECK(g.edges.size() == 10);
    CHECK(g.is_complete());
    CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        CHECK(g.edge_index(g.edges[i].a, g.edges[i].b) == static_cast<int>(i));
    CHECK(g.edge_index(3, 1) == g.edge_index(1, 3));
    CHECK(g.edge_index(0, 0) == -1);
    CHECK(edge_name(make_edge(2, 1)) == "v(1,2)-v(1,3)");
    CHECK(is_cross_edge(make_edge(2, 3)));
    CHECK(!is_cross_edge(make_edge(0, 2)));
}

TEST_CASE("f-vectors agree with the closed formula") {
    for (int n = 2; n <= 10; ++n) CHECK(complete(n).f_vector() == complete_graph_f_vector(n));
    CHECK(complete(6).f_vector() == std::vector<long long>{15, 45, 15});
    CHECK(complete(7).f_vector() == std::vector<long long>{21, 105, 105});
    CHECK(complete(8).f_vector() == std::vector<long long>{28, 210, 420, 105});
    CHECK(complete(2).f_vector() == std::vector<long long>{1});
    CHECK(complete(4).f_vector() == std::vector<long long>{6, 3});
    CHECK_THROWS_AS(complete_graph_f_vector(21), std::invalid_argument);
}

TEST_CASE("euler characteristics") {
    CHECK(complete(6).euler_characteristic() == -15);
    CHECK(complete(7).euler_characteristic() == 21);
    CHECK(complete(8).euler_characteristic() == 133);
    for (int n = 2; n <= 8; ++n) {
        auto f = complete(n).f_vector();
        long long chi = 0;
        for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? -1 : 1) * f[k];
        CHECK(complete(n).euler_characteristic() == chi);
    }
}

TEST_CASE("a path graph gives a small complex") {
    // 0-1-2-3: three edges, only the outer two are disjoint
    MatchingComplex cx = build_matching_complex(make_graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(cx.dim() == 1);
    CHECK(cx.f_vector() == std::vector<long long>{3, 1});
    auto top = cx.cell(1, 0);
    CHECK(std::vector<EdgeId>(top.begin(), top.end()) ==
          std::vector<EdgeId>{cx.graph().edge_index(0, 1), cx.graph().edge_index(2, 3)});
}

TEST_CASE("cells are sorted, findable and downward closed") {
    MatchingComplex cx = complete(6);
    for (int k = 0; k <= cx.dim(); ++k) {
        for (CellIndex i = 0; i < cx.size(k); ++i) {
            auto cell = cx.cell(k, i);
            CHECK(std::is_sorted(cell.begin(), cell.end()));
            CHECK(cx.find(k, cell) == i);
            if (i + 1 < cx.size(k)) {
                auto next = cx.cell(k, i + 1);
                CHECK(std::lexicographical_compare(cell.begin(), cell.end(), next.begin(),
                                                   next.end()));
            }
            if (k > 0) CHECK(cx.facets(k, i).size() == static_cast<std::size_t>(k) + 1);
        }
    }
}

TEST_CASE("facets and cofacets are inverse") {
    MatchingComplex cx = complete(5);
    for (int k = 1; k <= cx.dim(); ++k) {
        for (CellIndex i = 0; i < cx.size(k); ++i) {
            for (auto f : cx.facets(k, i)) {
                auto up = cx.cofacets(k - 1, f.index);
                bool found = false;
                for (auto c : up) found = found || (c.index == i && c.sign == f.sign);
                CHECK(found);
            }
        }
    }
}

TEST_CASE("incidence numbers alternate over the deleted position") {
    std::vector<EdgeId> beta{2, 5, 9};
    CHECK(incidence_number(beta, std::vector<EdgeId>{5, 9}) == 1);
    CHECK(incidence_number(beta, std::vector<EdgeId>{2, 9}) == -1);
    CHECK(incidence_number(beta, std::vector<EdgeId>{2, 5}) == 1);
    CHECK(incidence_number(beta, std::vector<EdgeId>{3, 9}) == 0);
    CHECK_THROWS_AS(incidence_number(beta, std::vector<EdgeId>{2}), std::invalid_argument);
}

TEST_CASE("boundary matrices compose to zero") {
    MatchingComplex cx = complete(7);
    for (int k = 2; k <= cx.dim(); ++k) {
        SparseIntMatrix lower = cx.boundary_matrix(k - 1);
        SparseIntMatrix upper = cx.boundary_matrix(k);
        CHECK(lower.rows == cx.size(k - 2));
        CHECK(lower.cols == upper.rows);
        CHECK(multiply(lower, upper).is_zero());
    }
    CHECK_THROWS_AS(cx.boundary_matrix(0), std::invalid_argument);
}

TEST_CASE("boundary of a single-point complex is empty") {
    MatchingComplex cx = complete(2);
    CHECK(cx.dim() == 0);
    SparseIntMatrix m = cx.boundary_matrix(1);
    CHECK(m.rows == 1);
    CHECK(m.cols == 0);
    CHECK(m.is_zero());
}

TEST_CASE("cell names spell out the matching") {
    MatchingComplex cx = complete(7);
    EdgeId e = cx.graph().edge_index(1, 2);
    CHECK(cx.cell_name(0, cx.find(0, std::vector<EdgeId>{e})) == "{v(1,2)-v(1,3)}");
}
