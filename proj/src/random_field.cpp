#include "morsematch/random_field.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace morsematch {

namespace {

// draws go through the raw engine, not the standard distributions, so the
// same seed replays the same field on every standard library
double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

std::size_t below(std::mt19937_64& rng, std::size_t k) { return rng() % k; }

}  // namespace

RandomFieldResult random_discrete_field(const MatchingComplex& cx, std::uint64_t seed,
                                        double density) {
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("density must lie in [0, 1]");
    std::mt19937_64 rng(seed);

    std::vector<CellRef> order;
    order.reserve(static_cast<std::size_t>(cx.total_cells()));
    for (int k = 0; k <= cx.dim(); ++k)
        for (CellIndex i = 0; i < cx.size(k); ++i) order.push_back({k, i});
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[below(rng, i)]);

    std::vector<std::vector<char>> taken(static_cast<std::size_t>(cx.dim()) + 1);
    for (int k = 0; k <= cx.dim(); ++k)
        taken[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(cx.size(k)), 0);

    DiscreteVectorField field(cx);
    std::vector<CellIndex> free_up;
    for (CellRef c : order) {
        if (taken[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)]) continue;
        if (unit_real(rng) >= density) continue;
        if (c.dim == cx.dim()) continue;
        free_up.clear();
        for (auto f : cx.cofacets(c.dim, c.index))
            if (!taken[static_cast<std::size_t>(c.dim) + 1][static_cast<std::size_t>(f.index)])
                free_up.push_back(f.index);
        if (free_up.empty()) continue;
        CellIndex up = free_up[below(rng, free_up.size())];
        field.add_pair(c, {c.dim + 1, up});
        taken[static_cast<std::size_t>(c.dim)][static_cast<std::size_t>(c.index)] = 1;
        taken[static_cast<std::size_t>(c.dim) + 1][static_cast<std::size_t>(up)] = 1;
    }

    RandomFieldResult out{std::move(field), false};
    out.acyclic = !check_acyclic(out.field).has_value();
    return out;
}

DiscreteVectorField random_acyclic_field(const MatchingComplex& cx, std::uint64_t seed,
                                         int max_attempts) {
    std::mt19937_64 meta(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        double density = 0.3 + 0.6 * unit_real(meta);
        std::uint64_t sub_seed = meta();
        RandomFieldResult r = random_discrete_field(cx, sub_seed, density);
        if (r.acyclic) return std::move(r.field);
    }
    throw std::runtime_error("no acyclic field in " + std::to_string(max_attempts) + " attempts");
}

}  // namespace morsematch
