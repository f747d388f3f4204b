#include "morsematch/morse.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsematch {

namespace {

// Signed path-sum row of one critical k-cell tau: weights seeded with
// <tau, facet> on its facets, then pushed through the pairing in topological
// order of the arc relation a -> a' (a paired with b, a' facet of b). The
// weight reaching each critical (k-1)-cell is the full path sum of Eq-style
// contributions; cells paired downward absorb their weight.
class BoundaryPropagator {
public:
    BoundaryPropagator(const DiscreteVectorField& field, int k)
        : field_(field), cx_(field.complex()), k_(k) {
        topo_order();
    }

    // returns (critical (k-1)-cell, coefficient), ascending, zeros dropped
    std::vector<std::pair<CellIndex, long long>> row(CellIndex tau) {
        const int d = k_ - 1;
        std::vector<long long> w(static_cast<std::size_t>(cx_.size(d)), 0);
        for (auto f : cx_.facets(k_, tau)) w[static_cast<std::size_t>(f.index)] += f.sign;
        std::vector<std::pair<CellIndex, long long>> out;
        for (CellIndex a : order_) {
            long long wa = w[static_cast<std::size_t>(a)];
            if (wa == 0) continue;
            CellIndex b = field_.partner_up(d, a);
            if (b == no_cell) {
                if (field_.is_critical(d, a)) out.push_back({a, wa});
                continue;  // down-paired: the weight dies
            }
            int ia = incidence_number(cx_.cell(d + 1, b), cx_.cell(d, a));
            for (auto f : cx_.facets(d + 1, b)) {
                if (f.index == a) continue;
                w[static_cast<std::size_t>(f.index)] -= wa * ia * f.sign;
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const DiscreteVectorField& field_;
    const MatchingComplex& cx_;
    int k_;
    std::vector<CellIndex> order_;

    void topo_order() {
        const int d = k_ - 1;
        const CellIndex n = cx_.size(d);
        std::vector<int> indeg(static_cast<std::size_t>(n), 0);
        auto for_each_succ = [&](CellIndex a, auto&& fn) {
            CellIndex b = field_.partner_up(d, a);
            if (b == no_cell) return;
            for (auto f : cx_.facets(d + 1, b))
                if (f.index != a) fn(f.index);
        };
        for (CellIndex a = 0; a < n; ++a)
            for_each_succ(a, [&](CellIndex s) { ++indeg[static_cast<std::size_t>(s)]; });
        std::vector<CellIndex> queue;
        queue.reserve(static_cast<std::size_t>(n));
        for (CellIndex a = 0; a < n; ++a)
            if (indeg[static_cast<std::size_t>(a)] == 0) queue.push_back(a);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for_each_succ(queue[head], [&](CellIndex s) {
                if (--indeg[static_cast<std::size_t>(s)] == 0) queue.push_back(s);
            });
        }
        if (static_cast<CellIndex>(queue.size()) != n)
            throw std::invalid_argument("field has a closed path");
        order_ = std::move(queue);
    }
};

}  // namespace

MorseComplex build_morse_complex(const DiscreteVectorField& field) {
    const MatchingComplex& cx = field.complex();
    MorseComplex mc;
    mc.critical = critical_simplices(field).cells;
    mc.boundary.resize(mc.critical.size());
    for (int k = 1; k <= cx.dim(); ++k) {
        const auto& rows_cells = mc.critical[static_cast<std::size_t>(k - 1)];
        const auto& cols_cells = mc.critical[static_cast<std::size_t>(k)];
        SparseIntMatrix m(static_cast<int>(rows_cells.size()), static_cast<int>(cols_cells.size()));
        if (!rows_cells.empty() && !cols_cells.empty()) {
            std::vector<std::int32_t> row_of(static_cast<std::size_t>(cx.size(k - 1)), -1);
            for (std::size_t r = 0; r < rows_cells.size(); ++r)
                row_of[static_cast<std::size_t>(rows_cells[r])] = static_cast<std::int32_t>(r);
            BoundaryPropagator prop(field, k);
            for (std::size_t c = 0; c < cols_cells.size(); ++c) {
                for (auto [cell, value] : prop.row(cols_cells[c])) {
                    m.columns[c].push_back({row_of[static_cast<std::size_t>(cell)], value});
                }
            }
        }
        mc.boundary[static_cast<std::size_t>(k)] = std::move(m);
    }
    // chain condition; a failure here means the field was not a gradient field
    for (int k = 1; k + 1 <= cx.dim(); ++k) {
        if (!multiply(mc.boundary[static_cast<std::size_t>(k)],
                      mc.boundary[static_cast<std::size_t>(k + 1)]).is_zero())
            throw std::logic_error("composed boundary maps are nonzero at k=" + std::to_string(k));
    }
    return mc;
}

HomologyResult morse_homology(const DiscreteVectorField& field) {
    MorseComplex mc = build_morse_complex(field);
    return homology_of_chain_complex(mc.boundary, mc.dims());
}

long long morse_boundary_coefficient(const DiscreteVectorField& field, CellRef tau, CellRef sigma) {
    if (tau.dim != sigma.dim + 1)
        throw std::invalid_argument("coefficient needs consecutive dimensions");
    if (!field.is_critical(tau.dim, tau.index) || !field.is_critical(sigma.dim, sigma.index))
        throw std::invalid_argument("both cells must be critical");
    BoundaryPropagator prop(field, tau.dim);
    for (auto [cell, value] : prop.row(tau.index))
        if (cell == sigma.index) return value;
    return 0;
}

std::vector<std::pair<CellIndex, long long>> sign_scheme_boundary(const DiscreteVectorField& field,
                                                                  CellRef eta) {
    if (eta.dim != 2) throw std::invalid_argument("sign scheme applies to 2-cells");
    const MatchingComplex& cx = field.complex();
    std::vector<long long> acc(static_cast<std::size_t>(cx.size(1)), 0);
    for (const FacetPath& fp : paths_from_critical_cofaces(field, eta)) {
        // r: -1 labels above the arrows, the label on the eta -> a_0 arrow
        // included; s: number of upper cells stepped through
        int r = fp.facet_sign < 0 ? 1 : 0;
        const auto& cells = fp.path.cells;
        for (std::size_t t = 0; t + 2 < cells.size(); t += 2) {
            auto b = cx.cell(2, cells[t + 1]);
            if (incidence_number(b, cx.cell(1, cells[t])) < 0) ++r;
            if (incidence_number(b, cx.cell(1, cells[t + 2])) < 0) ++r;
        }
        int s = static_cast<int>(cells.size() / 2);
        int contribution = ((r + s) % 2 == 0) ? 1 : -1;
        acc[static_cast<std::size_t>(cells.back())] += contribution;
    }
    std::vector<std::pair<CellIndex, long long>> out;
    for (CellIndex i = 0; i < cx.size(1); ++i)
        if (acc[static_cast<std::size_t>(i)] != 0) out.push_back({i, acc[static_cast<std::size_t>(i)]});
    return out;
}

std::optional<MorseInequalityViolation> verify_morse_inequalities(
    const std::vector<long long>& critical_counts, const HomologyResult& homology) {
    const std::size_t d = std::max(critical_counts.size(), homology.betti.size());
    auto m = [&](std::size_t i) { return i < critical_counts.size() ? critical_counts[i] : 0; };
    auto b = [&](std::size_t i) { return i < homology.betti.size() ? homology.betti[i] : 0; };
    for (std::size_t i = 0; i < d; ++i)
        if (m(i) < b(i)) return MorseInequalityViolation{"weak", static_cast<int>(i)};
    for (std::size_t i = 0; i < d; ++i) {
        long long lhs = 0, rhs = 0;
        for (std::size_t j = 0; j <= i; ++j) {
            long long sgn = ((i - j) % 2 == 0) ? 1 : -1;
            lhs += sgn * m(j);
            rhs += sgn * b(j);
        }
        if (lhs < rhs) return MorseInequalityViolation{"strong", static_cast<int>(i)};
    }
    long long lhs = 0, rhs = 0;
    for (std::size_t j = 0; j < d; ++j) {
        long long sgn = (j % 2 == 0) ? 1 : -1;
        lhs += sgn * m(j);
        rhs += sgn * b(j);
    }
    if (lhs != rhs) return MorseInequalityViolation{"alternating-sum", -1};
    return std::nullopt;
}

}  // namespace morsematch
