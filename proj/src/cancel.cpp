#include "morsematch/cancel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace morsematch {

namespace {

CancelOutcome reject(CancelRejection r) {
    CancelOutcome out;
    out.rejection = std::move(r);
    return out;
}

std::string cell_name_of(const MatchingComplex& cx, CellRef c) {
    return cx.cell_name(c.dim, c.index);
}

}  // namespace

CancelOutcome cancel_critical_pairs(const DiscreteVectorField& field,
                                    const std::vector<CancelRequest>& requests) {
    const MatchingComplex& cx = field.complex();
    const int r = static_cast<int>(requests.size());
    if (r > 8) throw std::invalid_argument("at most 8 simultaneous cancellations are supported");

    for (int i = 0; i < r; ++i) {
        const auto& [beta, alpha] = requests[i];
        if (beta.dim != alpha.dim + 1) {
            CancelRejection rej{CancelRejection::Kind::DimensionMismatch, i, -1, {}, {}};
            std::ostringstream os;
            os << "request " << i << ": " << cell_name_of(cx, beta) << " is not one dimension above "
               << cell_name_of(cx, alpha);
            rej.message = os.str();
            return reject(std::move(rej));
        }
        for (CellRef c : {beta, alpha}) {
            if (!field.is_critical(c.dim, c.index)) {
                CancelRejection rej{CancelRejection::Kind::NotCritical, i, -1, {}, {}};
                rej.message = "request " + std::to_string(i) + ": " + cell_name_of(cx, c) +
                              " is not critical";
                return reject(std::move(rej));
            }
        }
    }

    // path counts between every requested beta (via its facets) and alpha
    std::vector<std::vector<long long>> count(static_cast<std::size_t>(r),
                                              std::vector<long long>(static_cast<std::size_t>(r), 0));
    std::vector<GradientPath> unique_path(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        const CellRef beta = requests[static_cast<std::size_t>(i)].beta;
        const int d = beta.dim - 1;
        for (auto f : cx.facets(beta.dim, beta.index)) {
            for (int j = 0; j < r; ++j) {
                const CellRef alpha = requests[static_cast<std::size_t>(j)].alpha;
                if (alpha.dim != d) continue;
                auto paths = paths_between(field, d, f.index, alpha.index);
                count[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    static_cast<long long>(paths.size());
                if (i == j && !paths.empty()) unique_path[static_cast<std::size_t>(i)] = paths.front();
            }
        }
    }
    for (int i = 0; i < r; ++i) {
        long long c = count[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        if (c != 1) {
            CancelRejection rej{CancelRejection::Kind::PathCount, i, c, {}, {}};
            std::ostringstream os;
            os << "request " << i << ": " << c << " paths from facets of "
               << cell_name_of(cx, requests[static_cast<std::size_t>(i)].beta) << " to "
               << cell_name_of(cx, requests[static_cast<std::size_t>(i)].alpha)
               << ", need exactly 1";
            rej.message = os.str();
            return reject(std::move(rej));
        }
    }

    // only the identity permutation may have a full set of paths
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        bool all = true;
        for (int i = 0; i < r && all; ++i)
            all = count[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] > 0;
        if (all) {
            CancelRejection rej{CancelRejection::Kind::Permutation, -1, -1, perm, {}};
            std::ostringstream os;
            os << "paths exist along the non-identity assignment (";
            for (int i = 0; i < r; ++i) os << (i ? " " : "") << perm[static_cast<std::size_t>(i)];
            os << ")";
            rej.message = os.str();
            return reject(std::move(rej));
        }
    }

    // reverse each unique path; the requests are provably disjoint here, the
    // erase/insert checks below only guard against internal mistakes
    std::set<std::pair<CellRef, CellRef>> pairs(field.pairs().begin(), field.pairs().end());
    for (int i = 0; i < r; ++i) {
        const auto& cells = unique_path[static_cast<std::size_t>(i)].cells;
        const int d = requests[static_cast<std::size_t>(i)].alpha.dim;
        for (std::size_t s = 0; s + 1 < cells.size(); s += 2) {
            if (!pairs.erase({CellRef{d, cells[s]}, CellRef{d + 1, cells[s + 1]}}))
                throw std::logic_error("reversed path step is not a field pair");
            if (!pairs.insert({CellRef{d, cells[s + 2]}, CellRef{d + 1, cells[s + 1]}}).second)
                throw std::logic_error("path reversal collided with an existing pair");
        }
        if (!pairs.insert({CellRef{d, cells.front()}, requests[static_cast<std::size_t>(i)].beta}).second)
            throw std::logic_error("path reversal collided with an existing pair");
    }

    DiscreteVectorField result(cx);
    for (const auto& [src, dst] : pairs) result.add_pair(src, dst);
    if (auto v = validate_field(result))
        throw std::logic_error("cancellation produced an invalid field: " + v->message);
    if (check_acyclic(result))
        throw std::logic_error("cancellation produced a field with a closed path");

    CancelOutcome out;
    out.field = std::move(result);
    return out;
}

}  // namespace morsematch
