#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace morsematch {

// Column-major sparse integer matrix. Entries within a column are kept
// sorted by row. Values are 64-bit: boundary matrices hold incidence data
// and path-count sums, which stay tiny at the sizes this library targets.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> columns;

    SparseIntMatrix() = default;
    SparseIntMatrix(int r, int c) : rows(r), cols(c), columns(static_cast<std::size_t>(c)) {}

    void set(int r, int c, std::int64_t v);  // insert or overwrite; v == 0 erases
    std::int64_t get(int r, int c) const;
    long long nnz() const;
    bool is_zero() const;
};

// exact product, used for boundary-composition checks
SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b);

}  // namespace morsematch
