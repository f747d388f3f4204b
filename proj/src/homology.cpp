#include "morsematch/homology.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace morsematch {

HomologyResult homology_of_chain_complex(const std::vector<SparseIntMatrix>& boundaries,
                                         const std::vector<long long>& dims) {
    const std::size_t top = dims.size();  // C_0 .. C_{top-1}
    if (top == 0) throw std::invalid_argument("empty chain complex");
    if (boundaries.size() != top)
        throw std::invalid_argument("need one boundary matrix per dimension above zero");
    for (std::size_t k = 1; k < top; ++k) {
        const auto& m = boundaries[k];
        if (m.rows != dims[k - 1] || m.cols != dims[k])
            throw std::invalid_argument("boundary shape mismatch at k=" + std::to_string(k));
    }
    for (std::size_t k = 1; k + 1 < top; ++k) {
        if (!multiply(boundaries[k], boundaries[k + 1]).is_zero())
            throw std::invalid_argument("composed boundary maps are nonzero at k=" +
                                        std::to_string(k + 1));
    }

    std::vector<SmithNormalForm> snf(top);
    for (std::size_t k = 1; k < top; ++k)
        snf[k] = smith_normal_form(IntegerMatrix::from_sparse(boundaries[k]));

    HomologyResult out;
    out.dims = dims;
    out.betti.resize(top);
    out.torsion.resize(top);
    for (std::size_t k = 0; k < top; ++k) {
        long long rank_in = k + 1 < top ? snf[k + 1].rank() : 0;
        long long rank_out = k >= 1 ? snf[k].rank() : 0;
        out.betti[k] = dims[k] - rank_out - rank_in;
        if (k + 1 < top)
            for (const BigInt& d : snf[k + 1].invariant_factors)
                if (d > 1) out.torsion[k].push_back(d);
    }
    return out;
}

HomologyResult simplicial_homology(const MatchingComplex& cx) {
    std::vector<SparseIntMatrix> boundaries(static_cast<std::size_t>(cx.dim()) + 1);
    for (int k = 1; k <= cx.dim(); ++k)
        boundaries[static_cast<std::size_t>(k)] = cx.boundary_matrix(k);
    return homology_of_chain_complex(boundaries, cx.f_vector());
}

std::string homology_group_name(long long betti, const std::vector<BigInt>& torsion) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " ⊕ ";
        first = false;
    };
    if (betti == 1) {
        sep();
        os << "Z";
    } else if (betti > 1) {
        sep();
        os << "Z^" << betti;
    }
    for (const BigInt& d : torsion) {
        sep();
        os << "Z_" << d;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace morsematch
