// command line front end: complexes, fields, homology, boundary tables,
// path listings, cancellation and the verification battery

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "morsematch/cancel.hpp"
#include "morsematch/complex.hpp"
#include "morsematch/constructions.hpp"
#include "morsematch/export.hpp"
#include "morsematch/field.hpp"
#include "morsematch/homology.hpp"
#include "morsematch/json_io.hpp"
#include "morsematch/morse.hpp"
#include "morsematch/paths.hpp"
#include "morsematch/selftest.hpp"

namespace mm = morsematch;

namespace {

[[noreturn]] void usage_fail(const std::string& message) {
    throw CLI::ValidationError(message);
}

void check_n_range(int n, int max_n) {
    if (n < 2 || n > max_n)
        usage_fail("n must be between 2 and " + std::to_string(max_n) +
                   " (raise --max-n or MORSEMATCH_MAX_N for more)");
}

void check_kind(const std::string& kind, int n) {
    if (kind == "M") {
        if (n < 5) usage_fail("the level sweep needs n >= 5");
    } else if (kind == "M_circ") {
        if (n < 6 || n % 2 != 0) usage_fail("the top-cell extension needs even n >= 6");
    } else if (kind == "M_star") {
        if (n < 7 || n % 3 != 1) usage_fail("the starred extension needs n = 3m + 1, n >= 7");
    } else if (kind == "M_double_star") {
        if (n != 7) usage_fail("the double cancellation is defined for n = 7 only");
    } else {
        usage_fail("unknown field kind: " + kind);
    }
}

mm::DiscreteVectorField build_kind(const mm::MatchingComplex& cx, const std::string& kind) {
    if (kind == "M") return mm::build_field_M(cx).first;
    if (kind == "M_circ") return mm::extend_to_M_circ(mm::build_field_M(cx).first);
    if (kind == "M_star") return mm::extend_to_M_star(mm::build_field_M(cx).first);
    return mm::build_field_M_double_star(cx);
}

// ---- names and addresses ----

const std::array<const char*, 8> kAliases{"xi",   "sigma1", "sigma2", "sigma3",
                                          "sigma4", "eta1", "eta2",   "eta3"};

std::string pretty_alias(const std::string& ascii) {
    if (ascii == "xi") return "\xCE\xBE";
    if (ascii.rfind("sigma", 0) == 0) return "\xCF\x83" + ascii.substr(5);
    if (ascii.rfind("eta", 0) == 0) return "\xCE\xB7" + ascii.substr(3);
    return ascii;
}

// accepts the greek spellings (and subscript digits) on the command line
std::string normalize_alias(std::string s) {
    static const std::pair<const char*, const char*> subs[] = {
        {"\xCF\x83", "sigma"},   {"\xCE\xB7", "eta"},     {"\xCE\xBE", "xi"},
        {"\xE2\x82\x81", "1"},   {"\xE2\x82\x82", "2"},   {"\xE2\x82\x83", "3"},
        {"\xE2\x82\x84", "4"},
    };
    for (auto [from, to] : subs) {
        std::string::size_type pos = 0;
        while ((pos = s.find(from, pos)) != std::string::npos) {
            s.replace(pos, std::string(from).size(), to);
            pos += std::string(to).size();
        }
    }
    return s;
}

bool has_aliases(const mm::MatchingComplex& cx) {
    return cx.graph().is_complete() && cx.graph().n_vertices == 7;
}

std::string cell_label(const mm::MatchingComplex& cx, int dim, mm::CellIndex index) {
    if (has_aliases(cx)) {
        for (const char* name : kAliases) {
            mm::CellRef c = mm::named_cell(cx, name);
            if (c.dim == dim && c.index == index) return pretty_alias(name);
        }
    }
    return cx.cell_name(dim, index);
}

mm::CellRef parse_cell(const mm::MatchingComplex& cx, const std::string& address) {
    std::string s = normalize_alias(address);
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        if (!has_aliases(cx))
            usage_fail("named cells exist on M_7 only; use dim:index for " + address);
        try {
            return mm::named_cell(cx, s);
        } catch (const std::invalid_argument&) {
            usage_fail("unknown cell name: " + address);
        }
    }
    int dim = 0;
    long index = 0;
    try {
        dim = std::stoi(s.substr(0, colon));
        index = std::stol(s.substr(colon + 1));
    } catch (const std::exception&) {
        usage_fail("cell addresses look like dim:index, got " + address);
    }
    if (dim < 0 || dim > cx.dim() || index < 0 || index >= cx.size(dim))
        usage_fail("no cell " + address + " in this complex");
    return {dim, static_cast<mm::CellIndex>(index)};
}

// ---- output helpers ----

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_path + " for writing");
    f << payload;
}

std::string fmt_counts(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

std::string critical_line(const mm::CriticalReport& crit) {
    std::string s = "critical:";
    auto counts = crit.counts();
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] != 0) s += " dim" + std::to_string(i) + "=" + std::to_string(counts[i]);
    return s;
}

std::string homology_line(const mm::HomologyResult& h) {
    std::string s;
    for (std::size_t k = 0; k < h.betti.size(); ++k) {
        std::string g = mm::homology_group_name(h.betti[k], h.torsion[k]);
        if (g == "0") continue;
        if (!s.empty()) s += ", ";
        s += "H" + std::to_string(k) + "=" + g;
    }
    return s.empty() ? "H0=0" : s;
}

std::string sign_combination(const std::vector<std::pair<std::string, long long>>& terms) {
    std::string s;
    for (const auto& [name, c] : terms) {
        if (c == 0) continue;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        long long mag = c < 0 ? -c : c;
        if (mag != 1) s += std::to_string(mag);
        s += name;
    }
    return s.empty() ? "0" : s;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

struct FieldedComplex {
    std::unique_ptr<mm::MatchingComplex> owned;  // engaged for loaded fields
    const mm::MatchingComplex* cx = nullptr;
    std::optional<mm::DiscreteVectorField> field;
    std::string construction;
};

// a complex plus a field of the requested kind; "from-file" loads both
FieldedComplex make_field(int n, const std::string& kind, const std::string& in_path) {
    FieldedComplex r;
    if (kind == "from-file") {
        if (in_path.empty()) usage_fail("kind from-file needs --in FILE");
        mm::LoadedField loaded = mm::field_from_json(read_file(in_path));
        if (loaded.complex->graph().n_vertices != n)
            usage_fail("the loaded field lives on n = " +
                       std::to_string(loaded.complex->graph().n_vertices) + ", not " +
                       std::to_string(n));
        r.owned = std::move(loaded.complex);
        r.cx = r.owned.get();
        r.field = std::move(loaded.field);
        r.construction = loaded.construction;
        return r;
    }
    check_kind(kind, n);
    r.owned = std::make_unique<mm::MatchingComplex>(
        mm::build_matching_complex(mm::build_complete_graph(n)));
    r.cx = r.owned.get();
    r.field = build_kind(*r.cx, kind);
    r.construction = kind;
    return r;
}

// ---- commands ----

void cmd_complex(int n, const std::string& format, const std::string& out) {
    mm::MatchingComplex cx = mm::build_matching_complex(mm::build_complete_graph(n));
    auto f = cx.f_vector();
    if (format == "json") {
        std::ostringstream os;
        os << "{\"n\": " << n << ", \"dim\": " << cx.dim() << ", \"f\": [";
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? ", " : "") << f[i];
        os << "], \"chi\": " << cx.euler_characteristic() << "}";
        emit(out, os.str());
        return;
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "dim,cells\n";
        for (std::size_t i = 0; i < f.size(); ++i) os << i << "," << f[i] << "\n";
        emit(out, os.str());
        return;
    }
    if (format != "text") usage_fail("complex supports text, json or csv output");
    std::ostringstream os;
    os << "matching complex M_" << n << ": dim = " << cx.dim() << "\n";
    os << "f = " << fmt_counts(f) << ", chi = " << cx.euler_characteristic() << "\n";
    emit(out, os.str());
}

void cmd_field(int n, const std::string& kind, const std::string& in_path,
               const std::string& format, const std::string& out) {
    FieldedComplex fc = make_field(n, kind, in_path);
    if (auto v = mm::validate_field(*fc.field))
        throw std::runtime_error("field validation failed: " + v->message);
    if (auto cycle = mm::check_acyclic(*fc.field))
        throw std::runtime_error("field has a closed path in dimension " +
                                 std::to_string(cycle->dim));
    std::string json = mm::field_to_json(*fc.field, fc.construction);
    if (!out.empty()) {
        emit(out, json);
        std::cout << critical_line(mm::critical_simplices(*fc.field)) << "\n";
        return;
    }
    if (format == "json") {
        emit("", json);
        return;
    }
    if (format != "text") usage_fail("field supports text or json output");
    std::cout << critical_line(mm::critical_simplices(*fc.field)) << "\n";
}

void cmd_homology(int n, const std::string& mode, bool check, const std::string& in_path,
                  const std::string& format, const std::string& out, int& exit_code) {
    std::string kind;
    bool simplicial = true;
    if (mode == "simplicial") {
        kind = "M";  // fallback for --check
    } else if (mode.rfind("morse:", 0) == 0) {
        simplicial = false;
        kind = mode.substr(6);
    } else {
        usage_fail("--mode takes simplicial or morse:KIND");
    }

    if (check) {
        FieldedComplex fc = make_field(n, kind, in_path);
        mm::HomologyResult via_field = mm::morse_homology(*fc.field);
        mm::HomologyResult direct = mm::simplicial_homology(*fc.cx);
        if (via_field.betti == direct.betti && via_field.torsion == direct.torsion) {
            std::cout << "OK (morse == simplicial)\n";
            return;
        }
        std::cout << "morse:      " << homology_line(via_field) << "\n";
        std::cout << "simplicial: " << homology_line(direct) << "\n";
        std::cout << "check failed: the two computations disagree\n";
        exit_code = 1;
        return;
    }

    mm::HomologyResult h;
    if (simplicial) {
        if (kind == "from-file") usage_fail("simplicial mode takes no field file");
        mm::MatchingComplex cx = mm::build_matching_complex(mm::build_complete_graph(n));
        h = mm::simplicial_homology(cx);
    } else {
        FieldedComplex fc = make_field(n, kind, in_path);
        h = mm::morse_homology(*fc.field);
    }
    if (format == "json") {
        emit(out, mm::homology_to_json(h));
        return;
    }
    if (format != "text") usage_fail("homology supports text or json output");
    emit(out, homology_line(h) + "\n");
}

void cmd_boundary_table(const std::string& format, const std::string& out) {
    mm::MatchingComplex cx = mm::build_matching_complex(mm::build_complete_graph(7));
    mm::DiscreteVectorField star = mm::extend_to_M_star(mm::build_field_M(cx).first);
    mm::CriticalReport crit = mm::critical_simplices(star);
    const auto& ones = crit.cells.at(1);
    const auto& twos = crit.cells.at(2);

    if (format == "csv") {
        std::ostringstream os;
        os << "cell";
        for (std::size_t j = 0; j < ones.size(); ++j) os << ",sigma" << (j + 1);
        os << "\n";
        for (mm::CellIndex c : twos) {
            os << '"' << cell_label(cx, 2, c) << '"';
            for (mm::CellIndex s : ones)
                os << "," << mm::morse_boundary_coefficient(star, {2, c}, {1, s});
            os << "\n";
        }
        emit(out, os.str());
        return;
    }
    if (format != "text") usage_fail("boundary-table supports text or csv output");
    std::ostringstream os;
    for (mm::CellIndex c : twos) {
        std::vector<std::pair<std::string, long long>> terms;
        for (std::size_t j = 0; j < ones.size(); ++j)
            terms.push_back({"\xCF\x83" + std::to_string(j + 1),
                             mm::morse_boundary_coefficient(star, {2, c}, {1, ones[j]})});
        os << cell_label(cx, 2, c) << ": " << sign_combination(terms) << "\n";
    }
    emit(out, os.str());
}

void cmd_paths(int n, const std::string& kind, int dim, const std::string& cell_address,
               const std::string& in_path, const std::string& format, const std::string& out) {
    FieldedComplex fc = make_field(n, kind, in_path);
    const mm::MatchingComplex& cx = *fc.cx;
    if (dim < 0) dim = cx.dim();
    if (dim < 1 || dim > cx.dim())
        usage_fail("--dim must be between 1 and " + std::to_string(cx.dim()));

    std::optional<mm::CellRef> only;
    if (!cell_address.empty()) {
        only = parse_cell(cx, cell_address);
        if (only->dim != dim)
            usage_fail("cell " + cell_address + " has dimension " + std::to_string(only->dim) +
                       ", not " + std::to_string(dim));
        if (!fc.field->is_critical(only->dim, only->index))
            usage_fail("cell " + cell_address + " is not critical in this field");
    }

    if (format == "dot") {
        if (!only) usage_fail("dot output needs --cell to pick one family");
        emit(out, mm::paths_dot(*fc.field, *only));
        return;
    }
    if (format != "text") usage_fail("paths supports text or dot output");

    mm::CriticalReport crit = mm::critical_simplices(*fc.field);
    std::ostringstream os;
    for (mm::CellIndex c : crit.cells.at(static_cast<std::size_t>(dim))) {
        if (only && only->index != c) continue;
        auto family = mm::paths_from_critical_cofaces(*fc.field, {dim, c});
        os << cell_label(cx, dim, c) << ": " << family.size() << " paths\n";
        for (const mm::FacetPath& fp : family) {
            os << "  e=" << (fp.facet_sign < 0 ? "-1" : "+1")
               << " m=" << (fp.path.multiplicity < 0 ? "-1" : "+1") << ":";
            for (std::size_t i = 0; i < fp.path.cells.size(); ++i)
                os << (i ? " -> " : " ")
                   << cell_label(cx, dim - 1 + static_cast<int>(i % 2), fp.path.cells[i]);
            os << "\n";
        }
    }
    emit(out, os.str());
}

void cmd_cancel(const std::string& field_file, const std::vector<std::string>& pair_args,
                const std::string& format, const std::string& out, int& exit_code) {
    if (format != "text") usage_fail("cancel supports text output");
    mm::LoadedField loaded = mm::field_from_json(read_file(field_file));
    const mm::MatchingComplex& cx = *loaded.complex;

    std::vector<mm::CancelRequest> requests;
    for (const std::string& arg : pair_args) {
        auto comma = arg.find(',');
        if (comma == std::string::npos)
            usage_fail("pairs look like BETA,ALPHA (for example eta1,sigma4), got " + arg);
        requests.push_back({parse_cell(cx, arg.substr(0, comma)),
                            parse_cell(cx, arg.substr(comma + 1))});
    }

    mm::CancelOutcome outcome = mm::cancel_critical_pairs(loaded.field, requests);
    if (!outcome.ok()) {
        std::cout << "rejected: " << outcome.rejection->message << "\n";
        exit_code = 1;
        return;
    }
    std::cout << critical_line(mm::critical_simplices(*outcome.field)) << "\n";
    if (!out.empty()) emit(out, mm::field_to_json(*outcome.field));
}

void cmd_selftest(std::uint64_t seed, int& exit_code) {
    mm::VerificationReport first = mm::run_verification(seed);
    mm::VerificationReport second = mm::run_verification(seed);
    bool deterministic = first.text() == second.text();
    std::cout << first.text();
    std::cout << "criterion 14  " << (deterministic ? "PASS" : "FAIL")
              << "  two runs with one seed produce byte-identical reports\n";
    bool ok = first.all_passed() && deterministic;
    std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
    if (!ok) exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Morse theory on matching complexes of complete graphs"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out;
    std::string in_path;
    std::uint64_t seed = 20260819;
    int max_n = 13;
    bool check = false;
    int n = 0;
    std::string kind = "M";
    std::string mode = "simplicial";
    int dim = -1;
    std::string cell_address;
    std::string field_file;
    std::vector<std::string> pair_args;
    int exit_code = 0;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv", "dot"}));
        sub->add_option("--out", out, "write the result to this file");
    };
    auto add_max_n = [&](CLI::App* sub) {
        sub->add_option("--max-n", max_n, "largest n accepted (guards against blowups)")
            ->envname("MORSEMATCH_MAX_N");
    };

    CLI::App* c_complex = app.add_subcommand("complex", "f-vector and Euler characteristic");
    c_complex->add_option("n", n, "number of vertices")->required();
    add_format(c_complex);
    add_max_n(c_complex);
    c_complex->callback([&] {
        check_n_range(n, max_n);
        cmd_complex(n, format, out);
    });

    CLI::App* c_field = app.add_subcommand("field", "build a gradient field, print critical counts");
    c_field->add_option("n", n, "number of vertices")->required();
    c_field->add_option("kind", kind, "M | M_circ | M_star | M_double_star | from-file")
        ->required();
    c_field->add_option("--in", in_path, "field file for kind from-file");
    add_format(c_field);
    add_max_n(c_field);
    c_field->callback([&] {
        check_n_range(n, max_n);
        cmd_field(n, kind, in_path, format, out);
    });

    CLI::App* c_hom = app.add_subcommand("homology", "integer homology groups");
    c_hom->add_option("n", n, "number of vertices")->required();
    c_hom->add_option("--mode", mode, "simplicial | morse:KIND");
    c_hom->add_flag("--check", check, "compute both ways and compare");
    c_hom->add_option("--in", in_path, "field file for morse:from-file");
    add_format(c_hom);
    add_max_n(c_hom);
    c_hom->callback([&] {
        check_n_range(n, max_n);
        cmd_homology(n, mode, check, in_path, format, out, exit_code);
    });

    CLI::App* c_table = app.add_subcommand(
        "boundary-table", "boundary images of the critical 2-cells of the starred field on M_7");
    add_format(c_table);
    c_table->callback([&] { cmd_boundary_table(format, out); });

    CLI::App* c_paths = app.add_subcommand("paths", "V-path families below critical cells");
    c_paths->add_option("n", n, "number of vertices")->required();
    c_paths->add_option("kind", kind, "M | M_circ | M_star | M_double_star | from-file")
        ->required();
    c_paths->add_option("--dim", dim, "dimension of the starting critical cells (default: top)");
    c_paths->add_option("--cell", cell_address, "restrict to one cell (alias or dim:index)");
    c_paths->add_option("--in", in_path, "field file for kind from-file");
    add_format(c_paths);
    add_max_n(c_paths);
    c_paths->callback([&] {
        check_n_range(n, max_n);
        cmd_paths(n, kind, dim, cell_address, in_path, format, out);
    });

    CLI::App* c_cancel = app.add_subcommand("cancel", "cancel critical pairs of a stored field");
    c_cancel->add_option("field_file", field_file, "field to start from (JSON)")->required();
    c_cancel->add_option("pairs", pair_args, "requests BETA,ALPHA (aliases or dim:index)");
    add_format(c_cancel);
    c_cancel->callback([&] { cmd_cancel(field_file, pair_args, format, out, exit_code); });

    CLI::App* c_self = app.add_subcommand("selftest", "run the verification battery twice");
    c_self->add_option("--seed", seed, "seed for the random-field sweep");
    c_self->callback([&] { cmd_selftest(seed, exit_code); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
