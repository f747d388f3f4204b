#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "morsematch/cancel.hpp"
#include "morsematch/constructions.hpp"
#include "morsematch/homology.hpp"
#include "morsematch/morse.hpp"

using namespace morsematch;

namespace {

MatchingComplex complete(int n) { return build_matching_complex(build_complete_graph(n)); }

std::vector<std::pair<CellRef, CellRef>> sorted_pairs(const DiscreteVectorField& f) {
    auto p = f.pairs();
    std::sort(p.begin(), p.end());
    return p;
}

// the one edge present in dst but not in src
EdgeId added_edge(const MatchingComplex& cx, CellRef src, CellRef dst) {
    auto a = cx.cell(src.dim, src.index);
    auto b = cx.cell(dst.dim, dst.index);
    std::vector<EdgeId> diff;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff));
    REQUIRE(diff.size() == 1);
    return diff.front();
}

CellRef cell_of(const MatchingComplex& cx, const std::vector<std::pair<int, int>>& vpairs) {
    std::vector<EdgeId> ids;
    for (auto [u, v] : vpairs) ids.push_back(cx.graph().edge_index(u, v));
    std::sort(ids.begin(), ids.end());
    CellIndex i = cx.find(static_cast<int>(ids.size()) - 1, ids);
    REQUIRE(i != no_cell);
    return {static_cast<int>(ids.size()) - 1, i};
}

}  // namespace

TEST_CASE("level partitions") {
    LevelPartition p9 = build_level_partition(9);
    REQUIRE(p9.levels.size() == 3);
    CHECK(p9.levels[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(p9.levels[2] == std::vector<VertexId>{6, 7, 8});
    CHECK(p9.full_levels() == 3);

    CHECK(build_level_partition(7).levels == std::vector<std::vector<VertexId>>{
                                                 {0, 1, 2}, {3, 4, 5}, {6}});
    CHECK(build_level_partition(8).levels.back() == std::vector<VertexId>{6, 7});
    CHECK(build_level_partition(5).levels.back() == std::vector<VertexId>{3, 4});
    CHECK_THROWS_AS(build_level_partition(4), std::invalid_argument);
}

TEST_CASE("the sweep needs a complete graph on at least five vertices") {
    MatchingComplex small = complete(4);
    CHECK_THROWS_AS(build_field_M(small), std::invalid_argument);
    MatchingComplex path = build_matching_complex(make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    CHECK_THROWS_AS(build_field_M(path), std::invalid_argument);
}

TEST_CASE("sweep critical counts for n = 5..11") {
    const std::vector<std::pair<int, std::vector<long long>>> expected{
        {5, {1, 6}},
        {6, {1, 22, 6}},
        {7, {1, 22, 42}},
        {8, {1, 0, 168, 36}},
        {9, {1, 0, 332, 360}},
        {10, {1, 0, 332, 1872, 324}},
        {11, {1, 0, 0, 5148, 4212}},
    };
    for (const auto& [n, counts] : expected) {
        MatchingComplex cx = complete(n);
        auto [field, trace] = build_field_M(cx);
        CHECK(!validate_field(field));
        CHECK(!check_acyclic(field));
        CHECK(critical_simplices(field).counts() == counts);
    }
}

TEST_CASE("the scan order does not change the field") {
    for (int n : {7, 8}) {
        MatchingComplex cx = complete(n);
        auto asc = build_field_M(cx, ScanOrder::ascending).first;
        auto desc = build_field_M(cx, ScanOrder::descending).first;
        CHECK(sorted_pairs(asc) == sorted_pairs(desc));
    }
}

TEST_CASE("the build trace records stages consistently") {
    for (int n : {7, 8}) {
        MatchingComplex cx = complete(n);
        auto [field, trace] = build_field_M(cx);
        std::size_t want_stages = static_cast<std::size_t>(n / 3 + (n % 3 == 2 ? 1 : 0));
        REQUIRE(trace.stages.size() == want_stages);

        std::size_t paired = 0;
        for (std::size_t k = 0; k < trace.stages.size(); ++k) {
            int stage = static_cast<int>(k) + 1;
            const auto& st = trace.stages[k];
            paired += st.cover_one.size() + st.cover_none.size();
            for (const auto& bucket : {st.cover_one, st.cover_none}) {
                for (const auto& [src, dst] : bucket) {
                    // both cells survived the earlier stages and die now
                    CHECK(trace.in_unpaired_set(src, stage - 1));
                    CHECK(trace.in_unpaired_set(dst, stage - 1));
                    CHECK(!trace.in_unpaired_set(src, stage));
                    CHECK(!trace.in_unpaired_set(dst, stage));
                    CHECK(trace.consumed_at[static_cast<std::size_t>(src.dim)]
                                           [static_cast<std::size_t>(src.index)] == stage);
                }
            }
        }
        CHECK(paired == field.num_pairs());

        // the special 0-cell is consumed at stage one yet stays critical
        CellIndex xi = cx.graph().edge_index(vertex_at(1, 2), vertex_at(1, 3));
        CHECK(trace.consumed_at[0][static_cast<std::size_t>(xi)] == 1);
        CHECK(field.is_critical(0, xi));

        // tail pairs exist exactly when n = 3m + 2, and use no cover-one rule
        if (n % 3 == 2) {
            CHECK(trace.stages.back().cover_one.empty());
            CHECK(!trace.stages.back().cover_none.empty());
        }
    }
}

TEST_CASE("every sweep pair adds a levelled edge of its stage") {
    MatchingComplex cx = complete(8);
    auto [field, trace] = build_field_M(cx);
    for (std::size_t k = 0; k < trace.stages.size(); ++k) {
        const auto& st = trace.stages[k];
        for (const auto& bucket : {st.cover_one, st.cover_none}) {
            for (const auto& [src, dst] : bucket) {
                Edge e = cx.graph().edges[static_cast<std::size_t>(added_edge(cx, src, dst))];
                CHECK(!is_cross_edge(e));
                CHECK(vertex_coord(e.a).level == static_cast<int>(k) + 1);
            }
        }
    }
}

TEST_CASE("the top-cell extension pairs away all maximal critical cells") {
    for (int n : {6, 8}) {
        MatchingComplex cx = complete(n);
        DiscreteVectorField m = build_field_M(cx).first;
        DiscreteVectorField circ = extend_to_M_circ(m);
        CHECK(!validate_field(circ));
        CHECK(!check_acyclic(circ));

        std::size_t extra = circ.num_pairs() - m.num_pairs();
        CHECK(extra == (n == 6 ? 6 : 36));
        CHECK(critical_simplices(circ).counts().back() == 0);

        // the new pairs drop the edge at the first vertex of the last level
        std::set<std::pair<CellRef, CellRef>> old_pairs(m.pairs().begin(), m.pairs().end());
        VertexId v_first = vertex_at((n + 2) / 3, 1);
        for (const auto& [src, dst] : circ.pairs()) {
            if (old_pairs.count({src, dst})) continue;
            CHECK(dst.dim == cx.dim());
            Edge e = cx.graph().edges[static_cast<std::size_t>(added_edge(cx, src, dst))];
            CHECK((e.a == v_first || e.b == v_first));
        }
    }
    MatchingComplex odd = complete(7);
    CHECK_THROWS_AS(extend_to_M_circ(build_field_M(odd).first), std::invalid_argument);
}

TEST_CASE("the starred extension pairs cross-edge 1-cells toward the last level") {
    MatchingComplex cx = complete(7);
    DiscreteVectorField m = build_field_M(cx).first;
    DiscreteVectorField star = extend_to_M_star(m);
    CHECK(!validate_field(star));
    CHECK(!check_acyclic(star));
    CHECK(star.num_pairs() - m.num_pairs() == 18);
    CHECK(critical_simplices(star).counts() == std::vector<long long>{1, 4, 24});

    std::set<std::pair<CellRef, CellRef>> old_pairs(m.pairs().begin(), m.pairs().end());
    for (const auto& [src, dst] : star.pairs()) {
        if (old_pairs.count({src, dst})) continue;
        CHECK(src.dim == 1);
        Edge e = cx.graph().edges[static_cast<std::size_t>(added_edge(cx, src, dst))];
        CHECK(vertex_coord(e.a).level == 1);
        CHECK(e.b == vertex_at(3, 1));
    }

    MatchingComplex wrong = complete(6);
    CHECK_THROWS_AS(extend_to_M_star(build_field_M(wrong).first), std::invalid_argument);

    // for n = 10 the rule is vacuous: no critical 1-cells remain to star
    MatchingComplex big = complete(10);
    DiscreteVectorField m10 = build_field_M(big).first;
    CHECK(extend_to_M_star(m10).num_pairs() == m10.num_pairs());
}

TEST_CASE("the double cancellation leaves the first two named 1-cells") {
    MatchingComplex cx = complete(7);
    DiscreteVectorField dstar = build_field_M_double_star(cx);
    CHECK(!validate_field(dstar));
    CHECK(!check_acyclic(dstar));
    CriticalReport crit = critical_simplices(dstar);
    CHECK(crit.counts() == std::vector<long long>{1, 2, 22});
    std::vector<CellIndex> expect{named_cell(cx, "sigma1").index, named_cell(cx, "sigma2").index};
    std::sort(expect.begin(), expect.end());
    CHECK(crit.cells.at(1) == expect);

    MatchingComplex wrong = complete(6);
    CHECK_THROWS_AS(build_field_M_double_star(wrong), std::invalid_argument);
}

TEST_CASE("connectivity bound values") {
    CHECK(connectivity_bound(3) == 0);
    CHECK(connectivity_bound(7) == 1);
    CHECK(connectivity_bound(9) == 2);
    CHECK(connectivity_bound(14) == 4);
    CHECK_THROWS_AS(connectivity_bound(0), std::invalid_argument);
}

TEST_CASE("named cells resolve to the advertised matchings") {
    MatchingComplex cx = complete(7);
    CHECK(named_cell(cx, "xi") == CellRef{0, cx.graph().edge_index(1, 2)});
    CHECK(named_cell(cx, "sigma1") == cell_of(cx, {{0, 1}, {3, 4}}));
    CHECK(named_cell(cx, "sigma4") == cell_of(cx, {{0, 2}, {3, 5}}));
    CHECK(named_cell(cx, "eta2") == cell_of(cx, {{0, 4}, {1, 3}, {5, 6}}));
    // the four 1-cells come in index order
    CHECK(named_cell(cx, "sigma1").index < named_cell(cx, "sigma2").index);
    CHECK(named_cell(cx, "sigma2").index < named_cell(cx, "sigma3").index);
    CHECK(named_cell(cx, "sigma3").index < named_cell(cx, "sigma4").index);
    CHECK_THROWS_AS(named_cell(cx, "sigma5"), std::invalid_argument);

    MatchingComplex six = complete(6);
    CHECK_THROWS_AS(named_cell(six, "eta1"), std::invalid_argument);
}

// ---- cancellation on small synthetic complexes ----

namespace {

struct PathSetup {
    MatchingComplex cx;  // matching complex of the path 0-1-2-3-4-5
    DiscreteVectorField field;
    CellRef e0, e2, e4, beta1, beta2, top;

    PathSetup()
        : cx(build_matching_complex(
              make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}))),
          field(cx),
          e0(cell_of(cx, {{0, 1}})),
          e2(cell_of(cx, {{2, 3}})),
          e4(cell_of(cx, {{4, 5}})),
          beta1(cell_of(cx, {{0, 1}, {4, 5}})),
          beta2(cell_of(cx, {{1, 2}, {3, 4}})),
          top(cell_of(cx, {{0, 1}, {2, 3}, {4, 5}})) {
        field.add_pair(cell_of(cx, {{1, 2}}), cell_of(cx, {{1, 2}, {4, 5}}));
        field.add_pair(cell_of(cx, {{3, 4}}), cell_of(cx, {{0, 1}, {3, 4}}));
        REQUIRE(!validate_field(field));
        REQUIRE(!check_acyclic(field));
    }
};

}  // namespace

TEST_CASE("cancelling a unique path reverses it") {
    PathSetup s;
    CancelOutcome outcome = cancel_critical_pairs(s.field, {{s.beta2, s.e4}});
    REQUIRE(outcome.ok());
    CHECK(outcome.field->num_pairs() == s.field.num_pairs() + 1);
    CHECK(!outcome.field->is_critical(s.beta2.dim, s.beta2.index));
    CHECK(!outcome.field->is_critical(s.e4.dim, s.e4.index));
    CHECK(!check_acyclic(*outcome.field));

    HomologyResult direct = simplicial_homology(s.cx);
    HomologyResult reduced = morse_homology(*outcome.field);
    CHECK(direct.betti == reduced.betti);
    CHECK(direct.torsion == reduced.torsion);
}

TEST_CASE("cancelling along a trivial path just adds the pair") {
    PathSetup s;
    CellRef beta = cell_of(s.cx, {{0, 1}, {2, 3}});
    CancelOutcome outcome = cancel_critical_pairs(s.field, {{beta, s.e0}});
    REQUIRE(outcome.ok());
    CHECK(outcome.field->num_pairs() == s.field.num_pairs() + 1);
    CHECK(outcome.field->partner_down(beta.dim, beta.index) == s.e0.index);
}

TEST_CASE("an empty request list returns the field unchanged") {
    PathSetup s;
    CancelOutcome outcome = cancel_critical_pairs(s.field, {});
    REQUIRE(outcome.ok());
    CHECK(sorted_pairs(*outcome.field) == sorted_pairs(s.field));
}

TEST_CASE("requests with no connecting path are rejected") {
    PathSetup s;
    CancelOutcome outcome = cancel_critical_pairs(s.field, {{s.beta1, s.e2}});
    REQUIRE(!outcome.ok());
    CHECK(outcome.rejection->kind == CancelRejection::Kind::PathCount);
    CHECK(outcome.rejection->path_count == 0);
    CHECK(outcome.rejection->request_index == 0);
}

TEST_CASE("non-critical and dimension-skewed requests are rejected") {
    PathSetup s;
    CellRef paired = cell_of(s.cx, {{1, 2}, {4, 5}});
    CancelOutcome not_critical = cancel_critical_pairs(s.field, {{paired, s.e0}});
    REQUIRE(!not_critical.ok());
    CHECK(not_critical.rejection->kind == CancelRejection::Kind::NotCritical);

    CancelOutcome skewed = cancel_critical_pairs(s.field, {{s.top, s.e0}});
    REQUIRE(!skewed.ok());
    CHECK(skewed.rejection->kind == CancelRejection::Kind::DimensionMismatch);
}

TEST_CASE("a cross-linked request set fails the permutation test") {
    PathSetup s;
    CancelOutcome outcome =
        cancel_critical_pairs(s.field, {{s.beta1, s.e0}, {s.beta2, s.e4}});
    REQUIRE(!outcome.ok());
    CHECK(outcome.rejection->kind == CancelRejection::Kind::Permutation);
    CHECK(outcome.rejection->witness_permutation == std::vector<int>{1, 0});
}

TEST_CASE("more than eight requests are refused outright") {
    PathSetup s;
    std::vector<CancelRequest> many(9, CancelRequest{s.beta1, s.e0});
    CHECK_THROWS_AS(cancel_critical_pairs(s.field, many), std::invalid_argument);
}

TEST_CASE("two paths to the same cell are counted and rejected") {
    // hexagon 0-1-2-3-4-5-0; two routes lead from the top pair down to {0,1}
    MatchingComplex cx = build_matching_complex(
        make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
    DiscreteVectorField f(cx);
    f.add_pair(cell_of(cx, {{2, 3}}), cell_of(cx, {{0, 1}, {2, 3}}));
    f.add_pair(cell_of(cx, {{4, 5}}), cell_of(cx, {{0, 1}, {4, 5}}));
    REQUIRE(!validate_field(f));
    REQUIRE(!check_acyclic(f));

    CancelOutcome outcome =
        cancel_critical_pairs(f, {{cell_of(cx, {{2, 3}, {4, 5}}), cell_of(cx, {{0, 1}})}});
    REQUIRE(!outcome.ok());
    CHECK(outcome.rejection->kind == CancelRejection::Kind::PathCount);
    CHECK(outcome.rejection->path_count == 2);
}
