#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "morsematch/constructions.hpp"
#include "morsematch/homology.hpp"
#include "morsematch/morse.hpp"

using namespace morsematch;

namespace {

MatchingComplex complete(int n) { return build_matching_complex(build_complete_graph(n)); }

std::vector<BigInt> factors(std::initializer_list<long long> xs) {
    std::vector<BigInt> out;
    for (long long x : xs) out.push_back(BigInt(x));
    return out;
}

}  // namespace

TEST_CASE("smith normal form of simple matrices") {
    CHECK(smith_normal_form(IntegerMatrix::from_dense(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}))
              .invariant_factors == factors({1, 1, 1}));
    CHECK(smith_normal_form(IntegerMatrix::from_dense(2, 3, {0, 0, 0, 0, 0, 0}))
              .invariant_factors.empty());
    CHECK(smith_normal_form(IntegerMatrix::from_dense(1, 1, {-2})).invariant_factors ==
          factors({2}));
    CHECK(smith_normal_form(IntegerMatrix::from_dense(2, 2, {4, 0, 0, 6})).invariant_factors ==
          factors({2, 12}));
}

TEST_CASE("smith normal form with a nontrivial invariant factor") {
    IntegerMatrix m = IntegerMatrix::from_dense(4, 6,
                                                {1, 0, 1, 1, 1, 0,    //
                                                 0, 1, -1, -1, 0, 1,  //
                                                 0, -1, -1, 0, -1, 1, //
                                                 -1, 0, 0, 1, 1, -1});
    SmithNormalForm snf = smith_normal_form(m);
    CHECK(snf.invariant_factors == factors({1, 1, 1, 3}));
    CHECK(snf.rank() == 4);

    // feeding the diagonal back in reproduces it
    IntegerMatrix diag(4, 4);
    for (int i = 0; i < 4; ++i)
        diag.columns[static_cast<std::size_t>(i)].push_back({i, snf.invariant_factors[static_cast<std::size_t>(i)]});
    CHECK(smith_normal_form(diag).invariant_factors == snf.invariant_factors);
}

TEST_CASE("large entries survive the elimination") {
    const long long a = 1LL << 62;
    SmithNormalForm snf = smith_normal_form(IntegerMatrix::from_dense(2, 2, {a, 1, 1, 1}));
    REQUIRE(snf.invariant_factors.size() == 2);
    CHECK(snf.invariant_factors[0] == BigInt(1));
    CHECK(snf.invariant_factors[1] == BigInt(a) - 1);
}

namespace {

// forces every nonempty elimination core through the modular stage
struct ForceModularStage {
    ForceModularStage() { setenv("MORSEMATCH_SNF_DENSE_CORE_LIMIT", "0", 1); }
    ~ForceModularStage() { unsetenv("MORSEMATCH_SNF_DENSE_CORE_LIMIT"); }
};

}  // namespace

TEST_CASE("modular stage agrees with direct elimination") {
    // entries are kept away from +-1 so the unit stage leaves the core intact
    {
        ForceModularStage force;
        CHECK(smith_normal_form(IntegerMatrix::from_dense(3, 3, {2, 0, 0, 0, 6, 0, 0, 0, 30}))
                  .invariant_factors == factors({2, 6, 30}));
        CHECK(smith_normal_form(IntegerMatrix::from_dense(2, 2, {4, 0, 0, 6})).invariant_factors ==
              factors({2, 12}));
        CHECK(smith_normal_form(IntegerMatrix::from_dense(1, 2, {2, 3})).invariant_factors ==
              factors({1}));
        // third row is the sum of the first two: exercises the rank-deficient padding
        CHECK(smith_normal_form(
                  IntegerMatrix::from_dense(3, 4, {2, 4, 0, 2, 0, 6, 6, 0, 2, 10, 6, 2}))
                  .invariant_factors == factors({2, 6}));
    }

    // seeded random even matrices: the modular answer must match the direct one
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 3 + static_cast<int>(rng() % 8);
        int cols = 3 + static_cast<int>(rng() % 8);
        std::vector<long long> data(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
        for (long long& v : data) v = 2 * (static_cast<long long>(rng() % 7) - 3);
        IntegerMatrix m = IntegerMatrix::from_dense(rows, cols, data);
        std::vector<BigInt> direct = smith_normal_form(m).invariant_factors;
        ForceModularStage force;
        CHECK(smith_normal_form(m).invariant_factors == direct);
    }
}

TEST_CASE("chain complexes must compose to zero") {
    SparseIntMatrix one(1, 1);
    one.set(0, 0, 1);
    std::vector<SparseIntMatrix> boundaries{SparseIntMatrix(), one, one};
    try {
        homology_of_chain_complex(boundaries, {1, 1, 1});
        FAIL("expected a rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("k=2") != std::string::npos);
    }

    CHECK_THROWS_AS(homology_of_chain_complex({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(homology_of_chain_complex({SparseIntMatrix()}, {1, 2}),
                    std::invalid_argument);
}

TEST_CASE("homology of the smallest matching complexes") {
    HomologyResult h3 = simplicial_homology(complete(3));
    CHECK(h3.dims == std::vector<long long>{3});
    CHECK(h3.betti == std::vector<long long>{3});
    CHECK(h3.torsion == std::vector<std::vector<BigInt>>{{}});

    HomologyResult h4 = simplicial_homology(complete(4));
    CHECK(h4.betti == std::vector<long long>{3, 0});

    CHECK(simplicial_homology(complete(5)).betti == std::vector<long long>{1, 6});
    CHECK(simplicial_homology(complete(6)).betti == std::vector<long long>{1, 16, 0});
}

TEST_CASE("torsion appears at seven vertices") {
    HomologyResult h = simplicial_homology(complete(7));
    CHECK(h.betti == std::vector<long long>{1, 0, 20});
    CHECK(h.torsion[1] == factors({3}));
    CHECK(h.torsion[2].empty());
}

TEST_CASE("eight vertices give a wedge of 132 two-spheres") {
    HomologyResult h = simplicial_homology(complete(8));
    CHECK(h.betti == std::vector<long long>{1, 0, 132, 0});
    for (const auto& t : h.torsion) CHECK(t.empty());
}

TEST_CASE("morse homology regressions for larger sweeps") {
    {
        HomologyResult h = morse_homology(build_field_M(complete(9)).first);
        CHECK(h.betti == std::vector<long long>{1, 0, 42, 70});
        CHECK(h.torsion[2] == std::vector<BigInt>(8, BigInt(3)));
        CHECK(h.torsion[3].empty());
    }
    {
        HomologyResult h = morse_homology(build_field_M(complete(10)).first);
        CHECK(h.betti == std::vector<long long>{1, 0, 0, 1216, 0});
        CHECK(h.torsion[2] == factors({3}));
    }
    {
        HomologyResult h = morse_homology(build_field_M(complete(11)).first);
        CHECK(h.betti == std::vector<long long>{1, 0, 0, 1188, 252});
        CHECK(h.torsion[3] == std::vector<BigInt>(45, BigInt(3)));
    }
}

TEST_CASE("group names") {
    CHECK(homology_group_name(0, {}) == "0");
    CHECK(homology_group_name(1, {}) == "Z");
    CHECK(homology_group_name(20, {}) == "Z^20");
    CHECK(homology_group_name(0, factors({3})) == "Z_3");
    CHECK(homology_group_name(2, factors({2, 4})) == "Z^2 ⊕ Z_2 ⊕ Z_4");
    CHECK(homology_group_name(1, factors({3})) == "Z ⊕ Z_3");
}
