#include "morsematch/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsematch {

void SparseIntMatrix::set(int r, int c, std::int64_t v) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("matrix index out of range");
    auto& col = columns[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        if (v == 0)
            col.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        col.insert(it, {r, v});
    }
}

std::int64_t SparseIntMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("matrix index out of range");
    const auto& col = columns[static_cast<std::size_t>(c)];
    auto it = std::lower_bound(col.begin(), col.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return 0;
}

long long SparseIntMatrix::nnz() const {
    long long n = 0;
    for (const auto& col : columns) n += static_cast<long long>(col.size());
    return n;
}

bool SparseIntMatrix::is_zero() const { return nnz() == 0; }

SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    SparseIntMatrix out(a.rows, b.cols);
    std::vector<std::int64_t> acc(static_cast<std::size_t>(a.rows), 0);
    std::vector<char> seen(static_cast<std::size_t>(a.rows), 0);
    std::vector<int> touched;
    for (int j = 0; j < b.cols; ++j) {
        touched.clear();
        for (auto [k, bv] : b.columns[static_cast<std::size_t>(j)]) {
            for (auto [i, av] : a.columns[static_cast<std::size_t>(k)]) {
                if (!seen[static_cast<std::size_t>(i)]) {
                    seen[static_cast<std::size_t>(i)] = 1;
                    touched.push_back(i);
                }
                acc[static_cast<std::size_t>(i)] += av * bv;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (int i : touched) {
            if (acc[static_cast<std::size_t>(i)] != 0)
                out.columns[static_cast<std::size_t>(j)].push_back({i, acc[static_cast<std::size_t>(i)]});
            acc[static_cast<std::size_t>(i)] = 0;
            seen[static_cast<std::size_t>(i)] = 0;
        }
    }
    return out;
}

}  // namespace morsematch
