// solvgraph: solvabilizers, solvable graphs and the solvability measure of
// finite-dimensional Lie superalgebras over odd prime fields.

#include <fstream>
#include <set>
#include <iostream>

#include <CLI11.hpp>

#include "solvgraph/catalog.hpp"
#include "solvgraph/io.hpp"
#include "solvgraph/parallel.hpp"
#include "solvgraph/verify.hpp"

namespace {

using namespace solvgraph;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

AlgebraPtr load_algebra(const std::string& path) {
    ParsedAlgebra parsed = parse_algebra_file(path);
    if (!parsed.algebra) {
        std::cout << "invalid: " << parsed.report.summary() << "\n";
        return nullptr;
    }
    return parsed.algebra;
}

Vec parse_element(const SuperAlgebra& L, const std::string& csv) {
    Vec v;
    std::string token;
    std::istringstream in(csv);
    const Fp& f = L.field();
    while (std::getline(in, token, ',')) {
        try {
            v.push_back(f.reduce(std::stoll(token)));
        } catch (const std::exception&) {
            throw Error("element: '" + token + "' is not an integer");
        }
    }
    if (v.size() != L.n())
        throw Error("element: expected " + std::to_string(L.n()) + " coordinates, got " +
                    std::to_string(v.size()));
    return v;
}

std::string render_element_set(const SuperAlgebra& L, const ElementSet& set) {
    std::ostringstream os;
    if (set.empty()) {
        os << "{} (empty)";
        return os.str();
    }
    if (set.size() <= 64) {
        os << "{";
        for (size_t i = 0; i < set.size(); ++i) {
            if (i) os << ", ";
            os << L.label(set[i]);
        }
        os << "} ";
    }
    os << "(" << set.size() << " elements)";
    return os.str();
}

std::string series_dims(const std::vector<Subspace>& series) {
    std::string out;
    for (size_t i = 0; i < series.size(); ++i) {
        if (i) out += " -> ";
        out += std::to_string(series[i].dim());
    }
    return out;
}

int cmd_validate(const std::string& path, bool strict) {
    ParsedAlgebra parsed =
        parse_algebra_file(path, strict ? AxiomLevel::Strict : AxiomLevel::Standard);
    if (!parsed.algebra) {
        std::cout << "invalid: " << parsed.report.summary() << "\n";
        return kExitCheckFailed;
    }
    const SuperAlgebra& L = *parsed.algebra;
    std::cout << "valid: p=" << L.p() << " dim=(" << L.dim_even() << "|" << L.dim_odd() << ")";
    if (!parsed.report.warnings.empty())
        std::cout << " with " << parsed.report.warnings.size()
                  << " strict-axiom warning(s); --strict rejects these";
    std::cout << "\n";
    for (const auto& w : parsed.report.warnings) std::cout << "  warning: " << w.message << "\n";
    return kExitOk;
}

int cmd_info(const std::string& path) {
    AlgebraPtr L = load_algebra(path);
    if (!L) return kExitCheckFailed;
    Subspace full = full_space(*L);
    std::cout << "p = " << L->p() << "\n";
    std::cout << "dim = (" << L->dim_even() << "|" << L->dim_odd() << "), total " << L->n() << "\n";
    if (!L->basis_names().empty()) {
        std::cout << "basis =";
        for (uint32_t i = 0; i < L->n(); ++i) std::cout << " " << L->basis_name(i);
        std::cout << "\n";
    }
    std::cout << "derived series dims: " << series_dims(derived_series(*L, full)) << "\n";
    std::cout << "lower central series dims: " << series_dims(lower_central_series(*L, full))
              << "\n";
    std::cout << "solvable: " << (is_solvable(*L, full) ? "yes" : "no") << "\n";
    std::cout << "nilpotent: " << (is_nilpotent(*L, full) ? "yes" : "no") << "\n";
    return kExitOk;
}

int cmd_sol(const std::string& path, const std::string& element_csv, bool nil, unsigned workers) {
    AlgebraPtr L = load_algebra(path);
    if (!L) return kExitCheckFailed;
    PairOracle oracle(L);
    const char* fn = nil ? "nil" : "sol";
    if (element_csv.empty()) {
        ElementSet result = nil ? nilpotentizer(oracle, workers) : solvabilizer(oracle, workers);
        std::cout << fn << "(L) = " << render_element_set(*L, result) << "\n";
    } else {
        Vec z = parse_element(*L, element_csv);
        ElementSet result =
            nil ? nilpotentizer_of(oracle, z, workers) : solvabilizer_of(oracle, z, workers);
        std::cout << fn << "_L(" << L->label(z) << ") = " << render_element_set(*L, result) << "\n";
    }
    return kExitOk;
}

int cmd_graph(const std::string& path, const std::string& kind_name, const std::string& dot_path,
              const std::string& csv_path, bool with_measure, unsigned workers) {
    AlgebraPtr L = load_algebra(path);
    if (!L) return kExitCheckFailed;
    GraphKind kind;
    if (kind_name == "solvable")
        kind = GraphKind::Solvable;
    else if (kind_name == "nonsolvable")
        kind = GraphKind::NonSolvable;
    else
        throw CLI::ValidationError("--kind must be solvable or nonsolvable");

    PairOracle oracle(L);
    SolvGraph g = build_graph(oracle, kind, workers);
    std::cout << "|V| = " << g.vertex_count() << "\n";
    std::cout << "|E| = " << g.edge_count << "\n";
    std::cout << "kappa = " << component_count(g) << "\n";
    if (with_measure) {
        if (kind != GraphKind::Solvable) throw Error("--measure applies to the solvable kind");
        std::cout << "nu = " << measure(g).pretty() << "\n";
    }
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw Error("cannot write '" + dot_path + "'");
        out << emit_graph(g, GraphFormat::Dot);
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw Error("cannot write '" + csv_path + "'");
        out << emit_graph(g, GraphFormat::EdgeCsv);
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, uint64_t seed, unsigned p_filter, uint32_t max_dim,
               uint32_t trials, unsigned workers) {
    static const std::set<std::string> known{"solvabilizer", "direct-sum", "morphism", "ses",
                                             "measure",      "pullback",   "all"};
    if (!known.count(suite))
        throw CLI::ValidationError("verify: unknown suite '" + suite + "'");
    VerifyOptions opts;
    opts.seed = seed;
    opts.max_dim = max_dim;
    opts.trials = trials;
    opts.workers = workers;
    if (p_filter != 0) opts.primes = {p_filter};
    std::vector<Report> reports = verify_suite(suite, opts);
    std::cout << render_reports(reports);
    return reports_all_passed(reports) ? kExitOk : kExitCheckFailed;
}

int cmd_catalog(const std::string& action, const std::string& name) {
    if (action == "list") {
        for (const auto& entry : catalog_algebras())
            std::cout << "algebra  " << entry.name << "  (" << entry.algebra->dim_even() << "|"
                      << entry.algebra->dim_odd() << ") over GF(" << entry.algebra->p() << ")  "
                      << entry.note << "\n";
        for (const auto& entry : catalog_morphisms())
            std::cout << "morphism " << entry.name << "  " << entry.note << "\n";
        return kExitOk;
    }
    if (action == "show") {
        if (catalog_has_algebra(name)) {
            std::cout << emit_algebra(*catalog_algebra(name));
            return kExitOk;
        }
        if (catalog_has_morphism(name)) {
            const Morphism& m = catalog_morphism(name);
            std::cout << "matrix rows (images of source basis):\n";
            for (const Vec& row : m.matrix()) std::cout << "  " << vec_to_string(row) << "\n";
            std::cout << "surjective: " << (m.surjective() ? "yes" : "no") << "\n";
            std::cout << "kernel dim: " << m.kernel().dim() << "\n";
            return kExitOk;
        }
        throw Error("catalog: unknown name '" + name + "'");
    }
    throw CLI::ValidationError("catalog action must be list or show");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solvabilizers and solvable graphs of Lie superalgebras over GF(p)"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned workers_flag = 0;
    app.add_option("--workers", workers_flag,
                   "worker threads (0 = SOLVGRAPH_WORKERS env or hardware)");

    std::string path, element_csv, kind_name = "solvable", dot_path, csv_path;
    bool nil_flag = false, measure_flag = false, strict_flag = false;
    std::string suite = "all", catalog_action, catalog_name;
    uint64_t seed = 1;
    unsigned p_filter = 0;
    uint32_t max_dim = 4, trials = 20;

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a definition file");
    validate_cmd->add_option("file", path)->required();
    validate_cmd->add_flag("--strict", strict_flag,
                           "also reject repeated-argument Jacobi and cube-rule violations");

    CLI::App* info_cmd = app.add_subcommand("info", "dimensions, series, solvability");
    info_cmd->add_option("file", path)->required();

    CLI::App* sol_cmd = app.add_subcommand("sol", "solvabilizer (or nilpotentizer) sets");
    sol_cmd->add_option("file", path)->required();
    sol_cmd->add_option("--element", element_csv, "comma-separated coordinates of z");
    sol_cmd->add_flag("--nil", nil_flag, "nilpotentizer instead of solvabilizer");

    CLI::App* graph_cmd = app.add_subcommand("graph", "build the solvable / non-solvable graph");
    graph_cmd->add_option("file", path)->required();
    graph_cmd->add_option("--kind", kind_name, "solvable|nonsolvable")->required();
    graph_cmd->add_option("--dot", dot_path, "write DOT to this path");
    graph_cmd->add_option("--csv", csv_path, "write the edge list to this path");
    graph_cmd->add_flag("--measure", measure_flag, "print the exact solvability measure");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run theorem verification suites");
    verify_cmd->add_option("suite", suite,
                           "solvabilizer|direct-sum|morphism|ses|measure|pullback|all");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--p", p_filter, "restrict instances to one prime (3 or 5)");
    verify_cmd->add_option("--max-dim", max_dim);
    verify_cmd->add_option("--trials", trials, "number of generated instances");

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "built-in algebras and morphisms");
    catalog_cmd->add_option("action", catalog_action, "list|show")->required();
    catalog_cmd->add_option("name", catalog_name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const unsigned workers = solvgraph::resolve_workers(workers_flag);
    try {
        if (*validate_cmd) return cmd_validate(path, strict_flag);
        if (*info_cmd) return cmd_info(path);
        if (*sol_cmd) return cmd_sol(path, element_csv, nil_flag, workers);
        if (*graph_cmd)
            return cmd_graph(path, kind_name, dot_path, csv_path, measure_flag, workers);
        if (*verify_cmd) return cmd_verify(suite, seed, p_filter, max_dim, trials, workers);
        if (*catalog_cmd) return cmd_catalog(catalog_action, catalog_name);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
