#include "morsematch/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsematch {

DiscreteVectorField::DiscreteVectorField(const MatchingComplex& cx) : cx_(&cx) {}

void DiscreteVectorField::add_pair(CellRef src, CellRef dst) {
    auto in_range = [&](CellRef c) {
        return c.dim >= 0 && c.dim <= cx_->dim() && c.index >= 0 && c.index < cx_->size(c.dim);
    };
    if (!in_range(src) || !in_range(dst))
        throw std::invalid_argument("pair references a cell outside the complex");
    pairs_.push_back({src, dst});
    compiled_ = false;
}

void DiscreteVectorField::ensure_compiled() const {
    if (compiled_) return;
    auto v = validate_field(*this);
    if (v) throw std::invalid_argument("invalid discrete vector field: " + v->message);
}

CellIndex DiscreteVectorField::partner_up(int dim, CellIndex i) const {
    ensure_compiled();
    if (dim < 0 || dim > cx_->dim() || i < 0 || i >= cx_->size(dim))
        throw std::out_of_range("cell reference out of range");
    return up_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(i)];
}

CellIndex DiscreteVectorField::partner_down(int dim, CellIndex i) const {
    ensure_compiled();
    if (dim < 0 || dim > cx_->dim() || i < 0 || i >= cx_->size(dim))
        throw std::out_of_range("cell reference out of range");
    return down_[static_cast<std::size_t>(dim)][static_cast<std::size_t>(i)];
}

bool DiscreteVectorField::is_critical(int dim, CellIndex i) const {
    return partner_up(dim, i) == no_cell && partner_down(dim, i) == no_cell;
}

std::optional<FieldViolation> validate_field(const DiscreteVectorField& field) {
    const MatchingComplex& cx = field.complex();
    std::vector<std::vector<CellIndex>> up(static_cast<std::size_t>(cx.dim() + 1));
    std::vector<std::vector<CellIndex>> down(static_cast<std::size_t>(cx.dim() + 1));
    std::vector<std::vector<char>> matched(static_cast<std::size_t>(cx.dim() + 1));
    for (int d = 0; d <= cx.dim(); ++d) {
        up[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(cx.size(d)), no_cell);
        down[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(cx.size(d)), no_cell);
        matched[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(cx.size(d)), 0);
    }
    auto name = [&](CellRef c) { return cx.cell_name(c.dim, c.index); };
    for (const auto& [a, b] : field.pairs()) {
        if (b.dim != a.dim + 1) {
            return FieldViolation{FieldViolation::Kind::DimensionGap, a, b,
                                  "pair (" + name(a) + ", " + name(b) + ") has dimension gap " +
                                      std::to_string(b.dim - a.dim)};
        }
        bool face = false;
        for (auto f : cx.facets(b.dim, b.index))
            if (f.index == a.index) { face = true; break; }
        if (!face) {
            return FieldViolation{FieldViolation::Kind::NotAFace, a, b,
                                  "pair (" + name(a) + ", " + name(b) + "): source is not a facet of target"};
        }
        for (CellRef c : {a, b}) {
            if (matched[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)]) {
                return FieldViolation{FieldViolation::Kind::DoublyMatched, a, b,
                                      "cell " + name(c) + " appears in more than one pair"};
            }
        }
        matched[static_cast<std::size_t>(a.dim)][static_cast<std::size_t>(a.index)] = 1;
        matched[static_cast<std::size_t>(b.dim)][static_cast<std::size_t>(b.index)] = 1;
        up[static_cast<std::size_t>(a.dim)][static_cast<std::size_t>(a.index)] = b.index;
        down[static_cast<std::size_t>(b.dim)][static_cast<std::size_t>(b.index)] = a.index;
    }
    field.up_ = std::move(up);
    field.down_ = std::move(down);
    field.compiled_ = true;
    return std::nullopt;
}

std::optional<ClosedPath> check_acyclic(const DiscreteVectorField& field) {
    const MatchingComplex& cx = field.complex();
    // per dimension, walk arcs a -> a' (through the up-partner b of a);
    // colors: 0 unvisited, 1 on stack, 2 done
    for (int d = 0; d < cx.dim(); ++d) {
        const CellIndex n = cx.size(d);
        std::vector<char> color(static_cast<std::size_t>(n), 0);
        std::vector<CellIndex> stack;        // cells a with color 1, in path order
        std::vector<std::size_t> next_edge;  // per stack entry: next facet position to try
        for (CellIndex s = 0; s < n; ++s) {
            if (color[static_cast<std::size_t>(s)] != 0) continue;
            stack.assign(1, s);
            next_edge.assign(1, 0);
            color[static_cast<std::size_t>(s)] = 1;
            while (!stack.empty()) {
                CellIndex a = stack.back();
                CellIndex b = field.partner_up(d, a);
                bool advanced = false;
                if (b != no_cell) {
                    auto fs = cx.facets(d + 1, b);
                    while (next_edge.back() < fs.size()) {
                        CellIndex a2 = fs[next_edge.back()].index;
                        ++next_edge.back();
                        if (a2 == a) continue;
                        char c2 = color[static_cast<std::size_t>(a2)];
                        if (c2 == 1) {
                            // cycle: slice the stack from a2 onward, add the b's
                            ClosedPath w;
                            w.dim = d;
                            auto it = std::find(stack.begin(), stack.end(), a2);
                            for (auto p = it; p != stack.end(); ++p) {
                                w.cells.push_back(*p);
                                w.cells.push_back(field.partner_up(d, *p));
                            }
                            w.cells.push_back(a2);
                            return w;
                        }
                        if (c2 == 0) {
                            color[static_cast<std::size_t>(a2)] = 1;
                            stack.push_back(a2);
                            next_edge.push_back(0);
                            advanced = true;
                            break;
                        }
                    }
                }
                if (!advanced) {
                    color[static_cast<std::size_t>(a)] = 2;
                    stack.pop_back();
                    next_edge.pop_back();
                }
            }
        }
    }
    return std::nullopt;
}

CriticalReport critical_simplices(const DiscreteVectorField& field) {
    const MatchingComplex& cx = field.complex();
    CriticalReport out;
    out.cells.resize(static_cast<std::size_t>(cx.dim() + 1));
    for (int d = 0; d <= cx.dim(); ++d)
        for (CellIndex i = 0; i < cx.size(d); ++i)
            if (field.is_critical(d, i)) out.cells[static_cast<std::size_t>(d)].push_back(i);
    return out;
}

}  // namespace morsematch
