#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "morsematch/field.hpp"
#include "morsematch/random_field.hpp"

using namespace morsematch;

static MatchingComplex complete(int n) {
    return build_matching_complex(build_complete_graph(n));
}

static CellIndex vertex_cell(const MatchingComplex& cx, int u, int v) {
    EdgeId e = cx.graph().edge_index(u, v);
    return cx.find(0, std::vector<EdgeId>{e});
}

static CellIndex pair_cell(const MatchingComplex& cx, int u1, int v1, int u2, int v2) {
    std::vector<EdgeId> ids{cx.graph().edge_index(u1, v1), cx.graph().edge_index(u2, v2)};
    std::sort(ids.begin(), ids.end());
    return cx.find(1, ids);
}

TEST_CASE("an empty field is valid and everything is critical") {
    MatchingComplex cx = complete(5);
    DiscreteVectorField f(cx);
    CHECK(!validate_field(f));
    CHECK(!check_acyclic(f));
    CHECK(f.is_critical(0, 0));
    CHECK(f.partner_up(0, 0) == no_cell);
    auto counts = critical_simplices(f).counts();
    CHECK(counts == cx.f_vector());
}

TEST_CASE("a single pair validates and is queryable") {
    MatchingComplex cx = complete(5);
    DiscreteVectorField f(cx);
    CellIndex a = vertex_cell(cx, 0, 1);
    CellIndex b = pair_cell(cx, 0, 1, 2, 3);
    f.add_pair({0, a}, {1, b});
    CHECK(!validate_field(f));
    CHECK(f.partner_up(0, a) == b);
    CHECK(f.partner_down(1, b) == a);
    CHECK(!f.is_critical(0, a));
    CHECK(!f.is_critical(1, b));
    CHECK(f.is_critical(0, vertex_cell(cx, 2, 3)));
}

TEST_CASE("out-of-range pairs are rejected at insertion") {
    MatchingComplex cx = complete(5);
    DiscreteVectorField f(cx);
    CHECK_THROWS_AS(f.add_pair({0, -1}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_pair({0, 0}, {1, cx.size(1)}), std::invalid_argument);
    CHECK_THROWS_AS(f.add_pair({5, 0}, {6, 0}), std::invalid_argument);
}

TEST_CASE("validation spots dimension gaps, non-faces and double matches") {
    MatchingComplex cx = complete(6);

    DiscreteVectorField gap(cx);
    gap.add_pair({0, 0}, {2, 0});
    auto v = validate_field(gap);
    REQUIRE(v.has_value());
    CHECK(v->kind == FieldViolation::Kind::DimensionGap);

    DiscreteVectorField nonface(cx);
    CellIndex a = vertex_cell(cx, 0, 1);
    CellIndex b = pair_cell(cx, 0, 2, 3, 4);  // does not contain {0,1}
    nonface.add_pair({0, a}, {1, b});
    v = validate_field(nonface);
    REQUIRE(v.has_value());
    CHECK(v->kind == FieldViolation::Kind::NotAFace);

    DiscreteVectorField doubled(cx);
    doubled.add_pair({0, a}, {1, pair_cell(cx, 0, 1, 2, 3)});
    doubled.add_pair({0, a}, {1, pair_cell(cx, 0, 1, 4, 5)});
    v = validate_field(doubled);
    REQUIRE(v.has_value());
    CHECK(v->kind == FieldViolation::Kind::DoublyMatched);
    CHECK_THROWS_AS(doubled.partner_up(0, a), std::invalid_argument);
}

TEST_CASE("a closed V-path is reported with its cycle") {
    // hexagon 0-1-2-3-4-5-0; alternate edges pairwise disjoint
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    MatchingComplex cx = build_matching_complex(g);
    auto ecell = [&](int u, int v) {
        return cx.find(0, std::vector<EdgeId>{cx.graph().edge_index(u, v)});
    };
    auto ppair = [&](int u1, int v1, int u2, int v2) {
        std::vector<EdgeId> ids{cx.graph().edge_index(u1, v1), cx.graph().edge_index(u2, v2)};
        std::sort(ids.begin(), ids.end());
        return cx.find(1, ids);
    };
    DiscreteVectorField f(cx);
    f.add_pair({0, ecell(0, 1)}, {1, ppair(0, 1, 2, 3)});
    f.add_pair({0, ecell(2, 3)}, {1, ppair(2, 3, 4, 5)});
    f.add_pair({0, ecell(4, 5)}, {1, ppair(4, 5, 0, 1)});
    CHECK(!validate_field(f));
    auto cycle = check_acyclic(f);
    REQUIRE(cycle.has_value());
    CHECK(cycle->dim == 0);
    CHECK(cycle->cells.size() >= 3);
    CHECK(cycle->cells.front() == cycle->cells.back());
}

TEST_CASE("random fields are valid and reproducible") {
    MatchingComplex cx = complete(6);
    RandomFieldResult a = random_discrete_field(cx, 17, 0.7);
    RandomFieldResult b = random_discrete_field(cx, 17, 0.7);
    CHECK(a.field.pairs() == b.field.pairs());
    CHECK(!validate_field(a.field));
    CHECK(a.acyclic == !check_acyclic(a.field).has_value());

    RandomFieldResult other = random_discrete_field(cx, 18, 0.7);
    CHECK(a.field.pairs() != other.field.pairs());

    RandomFieldResult empty = random_discrete_field(cx, 5, 0.0);
    CHECK(empty.field.num_pairs() == 0);
    CHECK_THROWS_AS(random_discrete_field(cx, 5, 1.5), std::invalid_argument);
}

TEST_CASE("random acyclic fields really are acyclic") {
    MatchingComplex cx = complete(6);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        DiscreteVectorField f = random_acyclic_field(cx, seed);
        CHECK(!validate_field(f));
        CHECK(!check_acyclic(f));
    }
}
