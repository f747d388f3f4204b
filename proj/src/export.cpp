#include "morsematch/export.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "morsematch/paths.hpp"

namespace morsematch {

namespace {

void dense_rows(std::ostringstream& os, const SparseIntMatrix& m,
                const std::vector<std::string>& row_labels) {
    std::vector<long long> row(static_cast<std::size_t>(m.cols), 0);
    for (int r = 0; r < m.rows; ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (int c = 0; c < m.cols; ++c) row[static_cast<std::size_t>(c)] = m.get(r, c);
        os << row_labels[static_cast<std::size_t>(r)];
        for (long long v : row) os << ',' << v;
        os << '\n';
    }
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

}  // namespace

std::string boundary_csv(const MatchingComplex& cx, int k) {
    SparseIntMatrix m = cx.boundary_matrix(k);
    std::ostringstream os;
    for (int c = 0; c < m.cols; ++c) os << ',' << c;
    os << '\n';
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m.rows));
    for (int r = 0; r < m.rows; ++r) labels.push_back(std::to_string(r));
    dense_rows(os, m, labels);
    return os.str();
}

std::string morse_boundary_csv(const MatchingComplex& cx, const MorseComplex& mc, int k) {
    if (k < 1 || static_cast<std::size_t>(k) >= mc.boundary.size())
        throw std::invalid_argument("no boundary map at k=" + std::to_string(k));
    const SparseIntMatrix& m = mc.boundary[static_cast<std::size_t>(k)];
    std::ostringstream os;
    for (CellIndex c : mc.critical[static_cast<std::size_t>(k)])
        os << ',' << quoted(cx.cell_name(k, c));
    os << '\n';
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m.rows));
    for (CellIndex r : mc.critical[static_cast<std::size_t>(k - 1)])
        labels.push_back(quoted(cx.cell_name(k - 1, r)));
    dense_rows(os, m, labels);
    return os.str();
}

std::string paths_dot(const DiscreteVectorField& field, CellRef from_critical) {
    const MatchingComplex& cx = field.complex();
    auto node_id = [](CellRef c) {
        return "d" + std::to_string(c.dim) + "_" + std::to_string(c.index);
    };

    std::map<CellRef, bool> nodes;  // cell -> drawn with a double border
    std::set<std::string> arcs;
    auto face_arc = [&](CellRef up, CellRef down, int sign) {
        arcs.insert("  \"" + node_id(up) + "\" -> \"" + node_id(down) + "\" [label=\"" +
                    (sign < 0 ? "-1" : "+1") + "\"];");
    };
    auto pair_arc = [&](CellRef down, CellRef up) {
        arcs.insert("  \"" + node_id(down) + "\" -> \"" + node_id(up) + "\" [style=dashed];");
    };

    nodes[from_critical] = true;
    const int d = from_critical.dim - 1;
    for (const FacetPath& fp : paths_from_critical_cofaces(field, from_critical)) {
        face_arc(from_critical, {d, fp.facet}, fp.facet_sign);
        const auto& cells = fp.path.cells;
        for (std::size_t t = 0; t < cells.size(); t += 2) nodes.insert({{d, cells[t]}, false});
        nodes[{d, cells.back()}] = true;
        for (std::size_t t = 0; t + 2 < cells.size(); t += 2) {
            CellRef a{d, cells[t]}, b{d + 1, cells[t + 1]}, a2{d, cells[t + 2]};
            nodes.insert({b, false});
            pair_arc(a, b);
            face_arc(b, a2, incidence_number(cx.cell(d + 1, b.index), cx.cell(d, a2.index)));
        }
    }

    std::ostringstream os;
    os << "digraph \"paths from " << cx.cell_name(from_critical.dim, from_critical.index)
       << "\" {\n";
    os << "  rankdir=TB;\n  node [shape=box];\n";
    for (const auto& [cell, doubled] : nodes) {
        os << "  \"" << node_id(cell) << "\" [label=\"" << cx.cell_name(cell.dim, cell.index)
           << "\"";
        if (doubled) os << ", peripheries=2";
        os << "];\n";
    }
    for (const std::string& a : arcs) os << a << '\n';
    os << "}\n";
    return os.str();
}

}  // namespace morsematch
