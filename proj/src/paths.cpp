#include "morsematch/paths.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace morsematch {

int path_multiplicity(const MatchingComplex& cx, const GradientPath& path) {
    const auto& cells = path.cells;
    if (cells.empty() || cells.size() % 2 == 0)
        throw std::invalid_argument("path must alternate a_0, b_0, ..., a_k");
    const int d = path.dim;
    if (d < 0 || d > cx.dim()) throw std::invalid_argument("path dimension out of range");
    auto check_index = [&](int dim, CellIndex i) {
        if (i < 0 || i >= cx.size(dim)) throw std::invalid_argument("path cell out of range");
    };
    check_index(d, cells[0]);
    int sign = 1;
    for (std::size_t t = 0; t + 2 < cells.size(); t += 2) {
        CellIndex a = cells[t], b = cells[t + 1], a2 = cells[t + 2];
        check_index(d + 1, b);
        check_index(d, a2);
        if (a2 == a) throw std::invalid_argument("path revisits the same facet");
        int ia = incidence_number(cx.cell(d + 1, b), cx.cell(d, a));
        int ia2 = incidence_number(cx.cell(d + 1, b), cx.cell(d, a2));
        if (ia == 0 || ia2 == 0)
            throw std::invalid_argument("path step is not a facet of its upper cell");
        sign *= -ia * ia2;
    }
    return sign;
}

bool is_field_path(const DiscreteVectorField& field, const GradientPath& path) {
    for (std::size_t t = 0; t + 1 < path.cells.size(); t += 2)
        if (field.partner_up(path.dim, path.cells[t]) != path.cells[t + 1]) return false;
    return true;
}

namespace {

struct Suffix {
    std::vector<CellIndex> cells;  // alternating, starts and ends at the path dimension
    int sign = 1;
};

// memoized suffix lists: for each cell, every path from it that ends at a
// cell satisfying `stop`; explores successor facets in ascending index order
class SuffixEnumerator {
public:
    SuffixEnumerator(const DiscreteVectorField& field, int dim, std::function<bool(CellIndex)> stop)
        : field_(field), cx_(field.complex()), dim_(dim), stop_(std::move(stop)),
          memo_(static_cast<std::size_t>(cx_.size(dim))), done_(static_cast<std::size_t>(cx_.size(dim)), 0) {}

    const std::vector<Suffix>& suffixes(CellIndex start) {
        compute(start);
        return memo_[static_cast<std::size_t>(start)];
    }

private:
    const DiscreteVectorField& field_;
    const MatchingComplex& cx_;
    int dim_;
    std::function<bool(CellIndex)> stop_;
    std::vector<std::vector<Suffix>> memo_;
    std::vector<char> done_;

    std::vector<CellIndex> successors(CellIndex a, CellIndex b) const {
        std::vector<CellIndex> out;
        for (auto f : cx_.facets(dim_ + 1, b))
            if (f.index != a) out.push_back(f.index);
        std::sort(out.begin(), out.end());
        return out;
    }

    void compute(CellIndex start) {
        if (done_[static_cast<std::size_t>(start)]) return;
        std::vector<CellIndex> stack{start};
        while (!stack.empty()) {
            CellIndex a = stack.back();
            if (done_[static_cast<std::size_t>(a)]) {
                stack.pop_back();
                continue;
            }
            if (stop_(a)) {
                memo_[static_cast<std::size_t>(a)] = {Suffix{{a}, 1}};
                done_[static_cast<std::size_t>(a)] = 1;
                stack.pop_back();
                continue;
            }
            CellIndex b = field_.partner_up(dim_, a);
            if (b == no_cell) {  // critical or down-paired: path dies here
                memo_[static_cast<std::size_t>(a)] = {};
                done_[static_cast<std::size_t>(a)] = 1;
                stack.pop_back();
                continue;
            }
            auto nexts = successors(a, b);
            bool ready = true;
            for (CellIndex a2 : nexts) {
                if (!done_[static_cast<std::size_t>(a2)]) {
                    stack.push_back(a2);
                    ready = false;
                }
            }
            if (!ready) continue;
            std::vector<Suffix> mine;
            int ia = incidence_number(cx_.cell(dim_ + 1, b), cx_.cell(dim_, a));
            for (CellIndex a2 : nexts) {
                int ia2 = incidence_number(cx_.cell(dim_ + 1, b), cx_.cell(dim_, a2));
                int step = -ia * ia2;
                for (const Suffix& s : memo_[static_cast<std::size_t>(a2)]) {
                    Suffix ext;
                    ext.cells.reserve(s.cells.size() + 2);
                    ext.cells.push_back(a);
                    ext.cells.push_back(b);
                    ext.cells.insert(ext.cells.end(), s.cells.begin(), s.cells.end());
                    ext.sign = step * s.sign;
                    mine.push_back(std::move(ext));
                }
            }
            memo_[static_cast<std::size_t>(a)] = std::move(mine);
            done_[static_cast<std::size_t>(a)] = 1;
            stack.pop_back();
        }
    }
};

}  // namespace

std::vector<GradientPath> paths_between(const DiscreteVectorField& field, int dim,
                                        CellIndex source, CellIndex target) {
    const MatchingComplex& cx = field.complex();
    if (dim < 0 || dim > cx.dim()) throw std::invalid_argument("dimension out of range");
    if (source < 0 || source >= cx.size(dim) || target < 0 || target >= cx.size(dim))
        throw std::invalid_argument("cell index out of range");
    if (check_acyclic(field)) throw std::invalid_argument("field has a closed path");
    SuffixEnumerator en(field, dim, [target](CellIndex c) { return c == target; });
    std::vector<GradientPath> out;
    for (const Suffix& s : en.suffixes(source)) {
        GradientPath p;
        p.dim = dim;
        p.cells = s.cells;
        p.multiplicity = s.sign;
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<FacetPath> paths_from_critical_cofaces(const DiscreteVectorField& field, CellRef eta) {
    const MatchingComplex& cx = field.complex();
    if (eta.dim < 1 || eta.dim > cx.dim() || eta.index < 0 || eta.index >= cx.size(eta.dim))
        throw std::invalid_argument("cell reference out of range");
    if (!field.is_critical(eta.dim, eta.index))
        throw std::invalid_argument("cell is not critical");
    if (check_acyclic(field)) throw std::invalid_argument("field has a closed path");
    const int d = eta.dim - 1;
    SuffixEnumerator en(field, d, [&](CellIndex c) { return field.is_critical(d, c); });

    auto fs = cx.facets(eta.dim, eta.index);
    std::vector<MatchingComplex::Face> faces(fs.begin(), fs.end());
    std::sort(faces.begin(), faces.end(),
              [](const auto& x, const auto& y) { return x.index < y.index; });
    std::vector<FacetPath> out;
    for (auto f : faces) {
        for (const Suffix& s : en.suffixes(f.index)) {
            FacetPath fp;
            fp.facet = f.index;
            fp.facet_sign = f.sign;
            fp.path.dim = d;
            fp.path.cells = s.cells;
            fp.path.multiplicity = s.sign;
            out.push_back(std::move(fp));
        }
    }
    return out;
}

}  // namespace morsematch
