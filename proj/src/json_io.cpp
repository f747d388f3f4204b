#include "morsematch/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace morsematch {

namespace {

using nlohmann::json;

json graph_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges) edges.push_back({e.a, e.b});
    return json{{"n", g.n_vertices}, {"edges", std::move(edges)}};
}

Graph graph_from(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph edge must be a two-element array");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return make_graph(j.at("n").get<int>(), edges);
}

}  // namespace

std::string graph_to_json(const Graph& g) { return graph_json(g).dump(); }

Graph graph_from_json(const std::string& text) {
    try {
        return graph_from(json::parse(text));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
    }
}

std::string complex_to_json(const MatchingComplex& cx) {
    json simplices = json::object();
    for (int k = 0; k <= cx.dim(); ++k) {
        json list = json::array();
        for (CellIndex i = 0; i < cx.size(k); ++i) {
            auto cell = cx.cell(k, i);
            list.push_back(json(std::vector<EdgeId>(cell.begin(), cell.end())));
        }
        simplices[std::to_string(k)] = std::move(list);
    }
    return json{{"simplices", std::move(simplices)}}.dump();
}

std::string field_to_json(const DiscreteVectorField& field, const std::string& construction) {
    const Graph& g = field.complex().graph();
    json out;
    if (!construction.empty()) out["construction"] = construction;
    out["n"] = g.n_vertices;
    out["complex"] = g.is_complete() ? json{{"complete", g.n_vertices}} : graph_json(g);
    json pairs = json::array();
    for (const auto& [src, dst] : field.pairs()) pairs.push_back({src.dim, src.index, dst.index});
    out["pairs"] = std::move(pairs);
    return out.dump();
}

LoadedField field_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad field JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("complex") || !j.contains("pairs"))
        throw std::invalid_argument("field JSON needs \"complex\" and \"pairs\"");

    try {
        const json& cj = j.at("complex");
        Graph g = cj.is_object() && cj.contains("complete")
                      ? build_complete_graph(cj.at("complete").get<int>())
                      : graph_from(cj);

        auto cx = std::make_unique<MatchingComplex>(build_matching_complex(g));
        DiscreteVectorField field(*cx);
        for (const json& p : j.at("pairs")) {
            if (!p.is_array() || p.size() != 3)
                throw std::invalid_argument("field pair must be [dim, src, dst]");
            int dim = p[0].get<int>();
            field.add_pair({dim, p[1].get<CellIndex>()}, {dim + 1, p[2].get<CellIndex>()});
        }
        if (auto v = validate_field(field))
            throw std::invalid_argument("field file is not a valid pairing: " + v->message);
        return LoadedField{std::move(cx), std::move(field), j.value("construction", "")};
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad field JSON: ") + e.what());
    }
}

std::string homology_to_json(const HomologyResult& h) {
    json torsion = json::array();
    for (const auto& factors : h.torsion) {
        json list = json::array();
        for (const BigInt& d : factors) {
            if (d <= BigInt(std::numeric_limits<long long>::max()))
                list.push_back(static_cast<long long>(d));
            else
                list.push_back(d.str());
        }
        torsion.push_back(std::move(list));
    }
    return json{{"dims", h.dims}, {"betti", h.betti}, {"torsion", std::move(torsion)}}.dump();
}

}  // namespace morsematch
