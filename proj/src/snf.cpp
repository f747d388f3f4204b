#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "morsematch/homology.hpp"

namespace morsematch {

namespace {

struct Overflow {};

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline long long checked_neg(long long a) { return checked_sub(0, a); }

inline BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt checked_neg(const BigInt& a) { return -a; }

inline bool abs_less(long long a, long long b) {
    unsigned long long ua = a < 0 ? 0ULL - static_cast<unsigned long long>(a)
                                  : static_cast<unsigned long long>(a);
    unsigned long long ub = b < 0 ? 0ULL - static_cast<unsigned long long>(b)
                                  : static_cast<unsigned long long>(b);
    return ua < ub;
}

inline bool abs_less(const BigInt& a, const BigInt& b) { return abs(a) < abs(b); }

// Elimination over Z has no luxury of field pivots: once the cheap +-1 pivots
// sit in dense rows, every further step trades fill and entry growth for
// progress. The caps below stop the sparse stage while entries are still
// small and the matrix is still sparse; whatever is left goes to a dense
// stage, which is exactly as correct, just happier on a compact core.
constexpr long long kFillCap = 10'000;        // Markowitz cost of the chosen pivot
constexpr long long kEntryCap = 1LL << 15;    // magnitude of any created entry
constexpr long long kNnzCap = 2'000'000;      // total live entries
constexpr std::size_t kModularCoreCells = 250'000;  // dense cells before the modular stage takes over

// test hook: lets the suite push small matrices through the modular stage
std::size_t modular_core_cells_limit() {
    if (const char* s = std::getenv("MORSEMATCH_SNF_DENSE_CORE_LIMIT"))
        return std::strtoull(s, nullptr, 10);
    return kModularCoreCells;
}

// Stage one: eliminate with unit pivots only. Every +-1 pivot splits off an
// invariant factor 1; what survives goes to the dense stage. Pivot choice is
// min Markowitz fill (nnz(row)-1)*(nnz(col)-1) over unit entries, so boundary
// matrices shed almost all of their bulk here while staying sparse. The scan
// order is fixed, so runs are deterministic.
template <typename Value>
struct UnitStage {
    std::vector<std::map<std::int32_t, Value>> col;  // eliminated columns are left empty
    std::vector<std::set<std::int32_t>> row_cols;    // row -> columns with an entry there
    int units = 0;
    bool entry_cap_hit = false;

    explicit UnitStage(const IntegerMatrix& m)
        : col(static_cast<std::size_t>(m.cols)), row_cols(static_cast<std::size_t>(m.rows)) {
        for (std::int32_t c = 0; c < m.cols; ++c) {
            for (const auto& [r, v] : m.columns[static_cast<std::size_t>(c)]) {
                if (v == 0) continue;
                if constexpr (std::is_same_v<Value, long long>) {
                    if (v > std::numeric_limits<long long>::max() ||
                        v < std::numeric_limits<long long>::min())
                        throw Overflow{};  // hand the whole matrix to the exact instantiation
                }
                col[static_cast<std::size_t>(c)][r] = static_cast<Value>(v);
                row_cols[static_cast<std::size_t>(r)].insert(c);
            }
        }
    }

    void put(std::int32_t r, std::int32_t c, const Value& v) {
        auto& column = col[static_cast<std::size_t>(c)];
        if (v == 0) {
            if (column.erase(r)) row_cols[static_cast<std::size_t>(r)].erase(c);
        } else {
            if (v < -kEntryCap || v > kEntryCap) entry_cap_hit = true;
            if (column.insert_or_assign(r, v).second) row_cols[static_cast<std::size_t>(r)].insert(c);
        }
    }

    long long live_entries() const {
        long long n = 0;
        for (const auto& column : col) n += static_cast<long long>(column.size());
        return n;
    }

    bool find_unit_pivot(std::int32_t& pr, std::int32_t& pc, long long& score) const {
        long long best = std::numeric_limits<long long>::max();
        pr = pc = -1;
        for (std::int32_t c = 0; c < static_cast<std::int32_t>(col.size()); ++c) {
            long long cn = static_cast<long long>(col[static_cast<std::size_t>(c)].size());
            if (cn == 0) continue;
            for (const auto& [r, v] : col[static_cast<std::size_t>(c)]) {
                if (v != 1 && v != -1) continue;
                long long rn = static_cast<long long>(row_cols[static_cast<std::size_t>(r)].size());
                long long sc = (rn - 1) * (cn - 1);
                if (sc < best) {
                    best = sc;
                    pr = r;
                    pc = c;
                }
            }
            if (best == 0) break;  // no score can beat a fill-free pivot
        }
        score = best;
        return pr >= 0;
    }

    void run() {
        std::int32_t pr, pc;
        long long score;
        while (!entry_cap_hit) {
            if (units % 16 == 0 && live_entries() > kNnzCap) break;
            if (!find_unit_pivot(pr, pc, score)) break;
            if (score > kFillCap) break;
            Value p = col[static_cast<std::size_t>(pc)].at(pr);  // +-1, its own inverse
            // column ops clear row pr outside the pivot column; the row ops
            // that would then clear column pc touch nothing else, so both
            // lines can simply be retired
            std::vector<std::int32_t> touched(row_cols[static_cast<std::size_t>(pr)].begin(),
                                              row_cols[static_cast<std::size_t>(pr)].end());
            for (std::int32_t c : touched) {
                if (c == pc) continue;
                Value f = checked_mul(col[static_cast<std::size_t>(c)].at(pr), p);
                for (const auto& [r, v] : col[static_cast<std::size_t>(pc)]) {
                    if (r == pr) continue;
                    auto it = col[static_cast<std::size_t>(c)].find(r);
                    Value cur = it == col[static_cast<std::size_t>(c)].end() ? Value(0) : it->second;
                    put(r, c, checked_sub(cur, checked_mul(f, v)));
                }
                col[static_cast<std::size_t>(c)].erase(pr);
            }
            for (const auto& [r, v] : col[static_cast<std::size_t>(pc)])
                row_cols[static_cast<std::size_t>(r)].erase(pc);
            col[static_cast<std::size_t>(pc)].clear();
            row_cols[static_cast<std::size_t>(pr)].clear();
            ++units;
        }
    }

    // compact what is left into a dense core
    template <typename Out>
    std::vector<std::vector<Out>> core_as() const {
        std::vector<std::int32_t> rmap(row_cols.size(), -1), cmap(col.size(), -1);
        std::int32_t nr = 0, nc = 0;
        for (std::size_t r = 0; r < row_cols.size(); ++r)
            if (!row_cols[r].empty()) rmap[r] = nr++;
        for (std::size_t c = 0; c < col.size(); ++c)
            if (!col[c].empty()) cmap[c] = nc++;
        std::vector<std::vector<Out>> dense(static_cast<std::size_t>(nr),
                                            std::vector<Out>(static_cast<std::size_t>(nc), Out(0)));
        for (std::size_t c = 0; c < col.size(); ++c) {
            if (cmap[c] < 0) continue;
            for (const auto& [r, v] : col[c])
                dense[static_cast<std::size_t>(rmap[static_cast<std::size_t>(r)])]
                     [static_cast<std::size_t>(cmap[c])] = Out(v);
        }
        return dense;
    }
};

// canonical divisibility chain d1 | d2 | ... via adjacent gcd/lcm passes;
// on a diagonal multiset this converges to the invariant factors
void divisibility_sweep(std::vector<BigInt>& diag) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i + 1] % diag[i] != 0) {
                BigInt g = gcd(diag[i], diag[i + 1]);
                diag[i + 1] = diag[i] / g * diag[i + 1];
                diag[i] = g;
                changed = true;
            }
    }
}

// Stage two: textbook Smith reduction of the dense core, min-|entry| pivot.
// The pivot row is kept sign-normalized so every division has a positive
// divisor (no INT64_MIN/-1 trap on the checked integer instantiation).
template <typename Value>
std::vector<BigInt> dense_snf(std::vector<std::vector<Value>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<BigInt> diag;
    int t = 0;
    auto fix_sign = [&](int tt) {
        if (a[static_cast<std::size_t>(tt)][static_cast<std::size_t>(tt)] < 0)
            for (int j = tt; j < cols; ++j)
                a[static_cast<std::size_t>(tt)][static_cast<std::size_t>(j)] =
                    checked_neg(a[static_cast<std::size_t>(tt)][static_cast<std::size_t>(j)]);
    };
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Value& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (v == 0) continue;
                if (pi < 0 || abs_less(v, a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)])) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
        for (int i = t; i < rows; ++i)
            std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
        fix_sign(t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] == 0) continue;
                Value q = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] /
                          a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
                if (q != 0)
                    for (int j = t; j < cols; ++j)
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = checked_sub(
                            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                            checked_mul(q, a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)]));
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0) {
                    // remainder beats the pivot, restart with it
                    std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(i)]);
                    fix_sign(t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] == 0) continue;
                Value q = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] /
                          a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
                if (q != 0)
                    for (int i = t; i < rows; ++i)
                        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = checked_sub(
                            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                            checked_mul(q, a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)]));
                if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0) {
                    for (int i = t; i < rows; ++i)
                        std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    fix_sign(t);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide everything below and to the right
                for (int i = t + 1; i < rows && clean; ++i)
                    for (int j = t + 1; j < cols && clean; ++j)
                        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] %
                                a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] !=
                            0) {
                            for (int jj = t; jj < cols; ++jj)
                                a[static_cast<std::size_t>(t)][static_cast<std::size_t>(jj)] = checked_add(
                                    a[static_cast<std::size_t>(t)][static_cast<std::size_t>(jj)],
                                    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)]);
                            clean = false;
                        }
            }
        }
        diag.push_back(BigInt(a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]));
        ++t;
    }
    divisibility_sweep(diag);
    return diag;
}

// ---------------------------------------------------------------------------
// Modular stage for cores too large for direct dense reduction. Direct
// elimination over Z suffers intermediate coefficient explosion on big
// rank-deficient cores; the cure is the classical one: all invariant factors
// divide any nonzero r x r minor (r = rank), so with M = 2 * gcd(such minors)
// the cokernel can be reduced with every entry kept in (-M/2, M/2]. The
// diagonal then yields gcd(d_i, M) = d_i, and columns never hit by a pivot
// contribute a factor M each (they are relations of the padded module only).
// Minors are certified nonzero by a nonzero determinant mod p; their exact
// values come from CRT over word-size primes under the Hadamard bound, so
// the stage is exact, not probabilistic. The rank from two independent
// primes is rechecked against the count of M-valued factors at the end, and
// any mismatch aborts loudly.
// ---------------------------------------------------------------------------

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t nth_prime_below_2_62(int skip) {
    std::uint64_t cand = (1ULL << 62) - 1;
    for (;; cand -= 2)
        if (is_prime_u64(cand)) {
            if (skip == 0) return cand;
            --skip;
        }
}

using DenseBig = std::vector<std::vector<BigInt>>;

struct PivotSets {
    int rank = 0;
    std::vector<int> rows, cols;  // an r x r submatrix nonsingular mod the probing prime
};

std::vector<int> row_order(int n, int kind) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    switch (kind & 3) {
        case 1:
            std::reverse(order.begin(), order.end());
            break;
        case 2: {  // evens first, odds after
            std::vector<int> o;
            o.reserve(order.size());
            for (int i = 0; i < n; i += 2) o.push_back(i);
            for (int i = 1; i < n; i += 2) o.push_back(i);
            order = std::move(o);
            break;
        }
        case 3:
            std::rotate(order.begin(), order.begin() + (n / 2 + n % 2), order.end());
            break;
        default:
            break;
    }
    return order;
}

inline std::uint64_t entry_mod_p(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

PivotSets pivot_sets_mod_p(const DenseBig& c, std::uint64_t p, int order_kind) {
    const int n = static_cast<int>(c.size());
    const int m = n == 0 ? 0 : static_cast<int>(c[0].size());
    std::vector<int> order = row_order(n, order_kind);
    std::vector<std::vector<std::uint64_t>> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                entry_mod_p(c[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(j)],
                            p);
    }
    PivotSets ps;
    int lead = 0;
    for (int j = 0; j < m && lead < n; ++j) {
        int piv = -1;
        for (int i = lead; i < n; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[static_cast<std::size_t>(lead)], w[static_cast<std::size_t>(piv)]);
        std::swap(order[static_cast<std::size_t>(lead)], order[static_cast<std::size_t>(piv)]);
        std::uint64_t inv = powmod_u64(w[static_cast<std::size_t>(lead)][static_cast<std::size_t>(j)],
                                       p - 2, p);
        for (int i = lead + 1; i < n; ++i) {
            std::uint64_t f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (f == 0) continue;
            f = mulmod_u64(f, inv, p);
            for (int k = j; k < m; ++k) {
                std::uint64_t sub =
                    mulmod_u64(f, w[static_cast<std::size_t>(lead)][static_cast<std::size_t>(k)], p);
                std::uint64_t& x = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
        ps.rows.push_back(order[static_cast<std::size_t>(lead)]);
        ps.cols.push_back(j);
        ++lead;
    }
    ps.rank = static_cast<int>(ps.rows.size());
    return ps;
}

std::uint64_t det_mod_p(const DenseBig& c, const std::vector<int>& rows, const std::vector<int>& cols,
                        std::uint64_t p) {
    const int r = static_cast<int>(rows.size());
    std::vector<std::vector<std::uint64_t>> w(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(r));
        for (int j = 0; j < r; ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                entry_mod_p(c[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])],
                            p);
    }
    std::uint64_t det = 1;
    for (int t = 0; t < r; ++t) {
        int piv = -1;
        for (int i = t; i < r; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != t) {
            std::swap(w[static_cast<std::size_t>(t)], w[static_cast<std::size_t>(piv)]);
            det = p - det;  // row swap flips the sign
            if (det == p) det = 0;
        }
        std::uint64_t pv = w[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
        det = mulmod_u64(det, pv, p);
        std::uint64_t inv = powmod_u64(pv, p - 2, p);
        for (int i = t + 1; i < r; ++i) {
            std::uint64_t f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            if (f == 0) continue;
            f = mulmod_u64(f, inv, p);
            for (int k = t; k < r; ++k) {
                std::uint64_t sub =
                    mulmod_u64(f, w[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)], p);
                std::uint64_t& x = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
    }
    return det;
}

// exact determinant via CRT under the Hadamard bound
BigInt det_exact(const DenseBig& c, const std::vector<int>& rows, const std::vector<int>& cols) {
    const int r = static_cast<int>(rows.size());
    long double bits = 2;
    for (int i = 0; i < r; ++i) {
        BigInt norm2 = 0;
        for (int j = 0; j < r; ++j) {
            const BigInt& v = c[static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])]
                               [static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
            norm2 += v * v;
        }
        if (norm2 < 1) norm2 = 1;
        bits += static_cast<long double>(msb(norm2) + 1) / 2;
    }
    BigInt x = 0, prod = 1;
    long double have = 0;
    std::uint64_t cand = (1ULL << 62) - 1;
    while (have <= bits) {
        while (!is_prime_u64(cand)) cand -= 2;
        std::uint64_t p = cand;
        cand -= 2;
        std::uint64_t d = det_mod_p(c, rows, cols, p);
        // incremental CRT: x <- x + prod * t with t = (d - x) / prod (mod p)
        std::uint64_t xp = static_cast<std::uint64_t>(x % p);
        std::uint64_t pp = static_cast<std::uint64_t>(prod % p);
        std::uint64_t diff = d >= xp ? d - xp : d + p - xp;
        std::uint64_t t = mulmod_u64(diff, powmod_u64(pp, p - 2, p), p);
        x += prod * BigInt(t);
        prod *= BigInt(p);
        have += std::log2(static_cast<long double>(p));
    }
    if (2 * x > prod) x -= prod;  // symmetric representative = the true determinant
    return x;
}

// diagonalize the core with entries reduced into (-M/2, M/2]; returns the
// diagonal values found (as many as pivoting could extract)
std::vector<BigInt> diagonalize_mod(DenseBig a, const BigInt& m_mod) {
    const int n = static_cast<int>(a.size());
    const int m = n == 0 ? 0 : static_cast<int>(a[0].size());
    auto reduce = [&](BigInt& x) {
        x %= m_mod;
        if (x < 0) x += m_mod;
        if (2 * x > m_mod) x -= m_mod;
    };
    for (auto& row : a)
        for (auto& x : row) reduce(x);
    std::vector<BigInt> diag;
    int t = 0;
    auto fix_sign = [&](int tt) {
        if (a[static_cast<std::size_t>(tt)][static_cast<std::size_t>(tt)] < 0)
            for (int j = tt; j < m; ++j)
                a[static_cast<std::size_t>(tt)][static_cast<std::size_t>(j)] =
                    -a[static_cast<std::size_t>(tt)][static_cast<std::size_t>(j)];
    };
    while (t < n && t < m) {
        int pi = -1, pj = -1;
        bool unit = false;
        for (int i = t; i < n && !unit; ++i)
            for (int j = t; j < m; ++j) {
                const BigInt& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (v == 0) continue;
                if (pi < 0 || abs_less(v, a[static_cast<std::size_t>(pi)][static_cast<std::size_t>(pj)])) {
                    pi = i;
                    pj = j;
                    if (v == 1 || v == -1) {
                        unit = true;  // nothing smaller exists
                        break;
                    }
                }
            }
        if (pi < 0) break;
        std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
        for (int i = t; i < n; ++i)
            std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
        fix_sign(t);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < n; ++i) {
                BigInt& head = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (head == 0) continue;
                BigInt q = head / a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
                if (q != 0)
                    for (int j = t; j < m; ++j) {
                        BigInt& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                        x -= q * a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                        reduce(x);
                    }
                if (head != 0) {
                    std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(i)]);
                    fix_sign(t);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m; ++j) {
                BigInt& head = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (head == 0) continue;
                BigInt q = head / a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
                if (q != 0)
                    for (int i = t; i < n; ++i) {
                        BigInt& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                        x -= q * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                        reduce(x);
                    }
                if (head != 0) {
                    for (int i = t; i < n; ++i)
                        std::swap(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    fix_sign(t);
                    clean = false;
                }
            }
        }
        diag.push_back(a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]);
        ++t;
    }
    return diag;
}

std::vector<BigInt> modular_core_snf(const DenseBig& core) {
    const int m = static_cast<int>(core[0].size());
    // independent rank probes; four primes with four row orders also
    // diversify the minors feeding the modulus
    std::vector<PivotSets> probes;
    int rank = 0;
    for (int kind = 0; kind < 4; ++kind) {
        probes.push_back(pivot_sets_mod_p(core, nth_prime_below_2_62(kind), kind));
        rank = std::max(rank, probes.back().rank);
    }
    if (rank == 0)
        throw std::runtime_error("smith normal form: rank probes missed a nonzero core");
    BigInt g = 0;
    for (const PivotSets& ps : probes) {
        if (ps.rank != rank) continue;
        g = gcd(g, abs(det_exact(core, ps.rows, ps.cols)));
        if (msb(g) < 96) break;  // modulus is already narrow enough
    }
    const BigInt m_mod = 2 * g;  // strictly larger than any invariant factor
    std::vector<BigInt> diag = diagonalize_mod(core, m_mod);
    std::vector<BigInt> factors;
    factors.reserve(static_cast<std::size_t>(m));
    for (const BigInt& d : diag) factors.push_back(gcd(d, m_mod));
    for (int i = static_cast<int>(diag.size()); i < m; ++i) factors.push_back(m_mod);
    divisibility_sweep(factors);
    int padding = 0;
    while (padding < static_cast<int>(factors.size()) &&
           factors[factors.size() - 1 - static_cast<std::size_t>(padding)] == m_mod)
        ++padding;
    if (m - padding != rank)
        throw std::runtime_error("smith normal form: modular stage disagreed with the rank probes");
    factors.resize(static_cast<std::size_t>(rank));
    return factors;
}

// entries small enough that no nonzero entry or minor argument is weakened
// by reduction mod a 62-bit probe prime
bool suits_modular_stage(const DenseBig& core) {
    const BigInt cap = BigInt(1) << 61;
    for (const auto& row : core)
        for (const BigInt& v : row)
            if (v >= cap || v <= -cap) return false;
    return true;
}

std::vector<BigInt> snf_factors(const IntegerMatrix& m) {
    int units = 0;
    std::vector<BigInt> rest;
    try {
        UnitStage<long long> stage(m);
        stage.run();  // caps keep every product within int64; Overflow here is a can't-happen guard
        units = stage.units;
        std::vector<std::vector<long long>> core = stage.core_as<long long>();
        const std::size_t cells = core.empty() ? 0 : core.size() * core[0].size();
        if (cells > modular_core_cells_limit()) {
            rest = modular_core_snf(stage.core_as<BigInt>());
        } else if (cells > 0) {
            try {
                rest = dense_snf<long long>(std::move(core));
            } catch (const Overflow&) {
                // direct elimination swelled past int64; the modular stage is immune
                rest = modular_core_snf(stage.core_as<BigInt>());
            }
        }
    } catch (const Overflow&) {
        // entries beyond int64 from the start
        UnitStage<BigInt> stage(m);
        stage.run();
        units = stage.units;
        DenseBig core = stage.core_as<BigInt>();
        if (!core.empty()) {
            if (suits_modular_stage(core))
                rest = modular_core_snf(core);
            else
                rest = dense_snf<BigInt>(std::move(core));  // last resort, exact but can swell
        }
    }
    std::vector<BigInt> factors(static_cast<std::size_t>(units), BigInt(1));
    for (BigInt& d : rest) factors.push_back(std::move(d));
    return factors;
}

}  // namespace

IntegerMatrix IntegerMatrix::from_sparse(const SparseIntMatrix& m) {
    IntegerMatrix out(m.rows, m.cols);
    for (std::size_t c = 0; c < m.columns.size(); ++c)
        for (const auto& [r, v] : m.columns[c]) out.columns[c].push_back({r, BigInt(v)});
    return out;
}

IntegerMatrix IntegerMatrix::from_dense(int rows, int cols, const std::vector<long long>& row_major) {
    if (static_cast<long long>(row_major.size()) != static_cast<long long>(rows) * cols)
        throw std::invalid_argument("dense data does not match the given shape");
    IntegerMatrix out(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            long long v = row_major[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) +
                                    static_cast<std::size_t>(c)];
            if (v != 0) out.columns[static_cast<std::size_t>(c)].push_back({r, BigInt(v)});
        }
    return out;
}

SmithNormalForm smith_normal_form(const IntegerMatrix& m) {
    SmithNormalForm out;
    out.invariant_factors = snf_factors(m);
    return out;
}

}  // namespace morsematch