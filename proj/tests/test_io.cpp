#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"

#include "morsematch/constructions.hpp"
#include "morsematch/export.hpp"
#include "morsematch/homology.hpp"
#include "morsematch/json_io.hpp"
#include "morsematch/morse.hpp"

using namespace morsematch;
using nlohmann::json;

static MatchingComplex complete(int n) { return build_matching_complex(build_complete_graph(n)); }

TEST_CASE("graphs round-trip through json") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.n_vertices == 5);
    CHECK(back.edges == g.edges);

    CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3}"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 3, \"edges\": [[0]]}"), std::invalid_argument);
}

TEST_CASE("complex export lists cells by dimension") {
    json j = json::parse(complex_to_json(complete(4)));
    REQUIRE(j.contains("simplices"));
    CHECK(j["simplices"]["0"].size() == 6);
    CHECK(j["simplices"]["1"].size() == 3);
    // position in the list is the cell index
    MatchingComplex cx = complete(4);
    auto first = cx.cell(1, 0);
    CHECK(j["simplices"]["1"][0].get<std::vector<int>>() ==
          std::vector<int>(first.begin(), first.end()));
}

TEST_CASE("fields round-trip through json with their construction tag") {
    MatchingComplex cx = complete(7);
    DiscreteVectorField star = extend_to_M_star(build_field_M(cx).first);

    std::string text = field_to_json(star, "M_star");
    LoadedField back = field_from_json(text);
    CHECK(back.construction == "M_star");
    CHECK(back.complex->graph().is_complete());
    CHECK(back.complex->graph().n_vertices == 7);

    auto sorted = [](std::vector<std::pair<CellRef, CellRef>> p) {
        std::sort(p.begin(), p.end());
        return p;
    };
    CHECK(sorted(back.field.pairs()) == sorted(star.pairs()));

    // untagged fields come back with an empty construction
    json j = json::parse(field_to_json(star));
    CHECK(!j.contains("construction"));
    CHECK(j["complex"]["complete"] == 7);
}

TEST_CASE("fields on arbitrary graphs embed the graph") {
    MatchingComplex cx =
        build_matching_complex(make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    DiscreteVectorField f(cx);
    EdgeId e12 = cx.graph().edge_index(1, 2);
    std::vector<EdgeId> up{e12, cx.graph().edge_index(4, 5)};
    std::sort(up.begin(), up.end());
    f.add_pair({0, cx.find(0, std::vector<EdgeId>{e12})}, {1, cx.find(1, up)});

    LoadedField back = field_from_json(field_to_json(f));
    CHECK(!back.complex->graph().is_complete());
    CHECK(back.complex->graph().edges == cx.graph().edges);
    CHECK(back.field.pairs() == f.pairs());
}

TEST_CASE("bad field files are refused") {
    CHECK_THROWS_AS(field_from_json("]["), std::invalid_argument);
    CHECK_THROWS_AS(field_from_json("{\"pairs\": []}"), std::invalid_argument);
    // a doubly matched cell: both pairs share source 0
    std::string doubled = "{\"complex\": {\"complete\": 6}, \"pairs\": [[0, 0, 0], [0, 0, 1]]}";
    CHECK_THROWS_AS(field_from_json(doubled), std::invalid_argument);
    // pair entries of the wrong shape
    CHECK_THROWS_AS(field_from_json("{\"complex\": {\"complete\": 6}, \"pairs\": [[0, 0]]}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(field_from_json("{\"complex\": {\"complete\": 6}, \"pairs\": [[\"x\", 0, 0]]}"),
                    std::invalid_argument);
}

TEST_CASE("homology serialization carries dims, betti and torsion") {
    MatchingComplex cx = complete(7);
    HomologyResult h = simplicial_homology(cx);
    json j = json::parse(homology_to_json(h));
    CHECK(j["dims"].get<std::vector<long long>>() == std::vector<long long>{21, 105, 105});
    CHECK(j["betti"].get<std::vector<long long>>() == std::vector<long long>{1, 0, 20});
    CHECK(j["torsion"][1].get<std::vector<long long>>() == std::vector<long long>{3});
    CHECK(j["torsion"][2].empty());
}

TEST_CASE("boundary matrices export as labelled csv") {
    MatchingComplex cx = complete(4);
    std::string csv = boundary_csv(cx, 1);
    auto lines = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (start < s.size()) {
            std::size_t end = s.find('\n', start);
            if (end == std::string::npos) end = s.size();
            out.push_back(s.substr(start, end - start));
            start = end + 1;
        }
        return out;
    };
    auto rows = lines(csv);
    REQUIRE(rows.size() == 7);  // header + six 0-cells
    CHECK(rows[0] == ",0,1,2");
    // each column of the vertex-to-edge boundary holds one +1 and one -1
    long long plus = 0, minus = 0;
    SparseIntMatrix m = cx.boundary_matrix(1);
    for (const auto& col : m.columns)
        for (auto [r, v] : col) (v > 0 ? plus : minus) += 1;
    CHECK(plus == 3);
    CHECK(minus == 3);
}

TEST_CASE("critical boundary csv uses quoted cell names") {
    MatchingComplex cx = complete(7);
    DiscreteVectorField star = extend_to_M_star(build_field_M(cx).first);
    MorseComplex mc = build_morse_complex(star);
    std::string csv = morse_boundary_csv(cx, mc, 2);
    CHECK(csv.find("\"{v(1,1)-v(1,2), v(2,1)-v(2,2)}\"") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);  // header + four rows
    CHECK_THROWS_AS(morse_boundary_csv(cx, mc, 9), std::invalid_argument);
}

TEST_CASE("path families render as dot graphs") {
    MatchingComplex cx = complete(7);
    DiscreteVectorField star = extend_to_M_star(build_field_M(cx).first);
    CellRef eta1 = named_cell(cx, "eta1");
    std::string dot = paths_dot(star, eta1);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("rankdir=TB") != std::string::npos);
    CHECK(dot.find("peripheries=2") != std::string::npos);  // critical endpoints
    CHECK(dot.find("style=dashed") != std::string::npos);   // pairing arcs
    for (const FacetPath& fp : paths_from_critical_cofaces(star, eta1)) {
        std::string arc = "\"d2_" + std::to_string(eta1.index) + "\" -> \"d1_" +
                          std::to_string(fp.facet) + "\" [label=\"" +
                          (fp.facet_sign < 0 ? "-1" : "+1") + "\"];";
        CHECK(dot.find(arc) != std::string::npos);
    }
}
