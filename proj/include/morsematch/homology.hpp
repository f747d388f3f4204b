#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morsematch/complex.hpp"
#include "morsematch/matrix.hpp"

namespace morsematch {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix with arbitrary-precision entries; the working type
// of the Smith normal form kernel.
struct IntegerMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, BigInt>>> columns;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}
    static IntegerMatrix from_sparse(const SparseIntMatrix& m);
    static IntegerMatrix from_dense(int rows, int cols, const std::vector<long long>& row_major);
};

struct SmithNormalForm {
    std::vector<BigInt> invariant_factors;  // positive, d1 | d2 | ... | dr
    int rank() const { return static_cast<int>(invariant_factors.size()); }
};

// classical elimination: repeatedly extract the pivot of least absolute
// value (unit pivots first, ties by least fill), reduce its row and column,
// enforce the divisibility chain; deterministic
SmithNormalForm smith_normal_form(const IntegerMatrix& m);

struct HomologyResult {
    std::vector<long long> dims;                 // basis sizes of C_0..C_D
    std::vector<long long> betti;                // b_0..b_D
    std::vector<std::vector<BigInt>> torsion;    // per dimension, factors > 1

    friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

// boundaries[k] is the matrix of the map C_k -> C_{k-1} for k = 1..D
// (boundaries[0] is ignored and may be empty); dims are the basis sizes.
// Consecutive matrices must compose to zero; the failing k is reported
// otherwise (std::invalid_argument).
HomologyResult homology_of_chain_complex(const std::vector<SparseIntMatrix>& boundaries,
                                         const std::vector<long long>& dims);

// homology of the cell-by-cell chain complex of the whole matching complex
HomologyResult simplicial_homology(const MatchingComplex& cx);

// "Z^b ⊕ Z_t1 ⊕ ..." with the conventional names: "0" for trivial,
// plain "Z" for b = 1 with no torsion
std::string homology_group_name(long long betti, const std::vector<BigInt>& torsion);

}  // namespace morsematch
