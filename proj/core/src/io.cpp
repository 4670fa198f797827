#include "solvgraph/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace solvgraph {

namespace {

using json = nlohmann::ordered_json;

uint32_t get_uint(const json& doc, const char* key) {
    if (!doc.contains(key)) throw ParseError(std::string("definition: missing key '") + key + "'");
    const json& v = doc.at(key);
    if (!v.is_number_unsigned())
        throw ParseError(std::string("definition: key '") + key + "' must be a non-negative integer");
    return v.get<uint32_t>();
}

}  // namespace

ParsedAlgebra parse_algebra(const std::string& text, AxiomLevel level) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("definition: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("definition: top level must be an object");

    BracketTable table = BracketTable::zero(get_uint(doc, "p"), get_uint(doc, "dim_even"),
                                            get_uint(doc, "dim_odd"));
    const uint32_t n = table.n();

    if (doc.contains("basis_names")) {
        const json& names = doc.at("basis_names");
        if (!names.is_array() || names.size() != n)
            throw ParseError("definition: basis_names must list one name per basis vector");
        for (const json& name : names) {
            if (!name.is_string()) throw ParseError("definition: basis_names entries must be strings");
            table.basis_names.push_back(name.get<std::string>());
        }
    }

    if (doc.contains("brackets")) {
        const json& brackets = doc.at("brackets");
        if (!brackets.is_array()) throw ParseError("definition: brackets must be an array");
        std::set<std::pair<uint32_t, uint32_t>> seen;
        for (size_t idx = 0; idx < brackets.size(); ++idx) {
            const json& rec = brackets[idx];
            const std::string where = "definition: brackets[" + std::to_string(idx) + "]";
            if (!rec.is_object()) throw ParseError(where + " must be an object");
            uint32_t i = get_uint(rec, "i"), j = get_uint(rec, "j");
            if (i >= n || j >= n) throw ParseError(where + ": basis index out of range");
            if (i > j) throw ParseError(where + ": stores only pairs with i <= j");
            if (!seen.insert({i, j}).second) throw ParseError(where + ": duplicate pair");
            if (!rec.contains("coeffs") || !rec.at("coeffs").is_object())
                throw ParseError(where + ": missing coeffs object");
            std::vector<std::pair<uint32_t, int64_t>> coeffs;
            for (const auto& [key, value] : rec.at("coeffs").items()) {
                uint32_t k = 0;
                try {
                    size_t pos = 0;
                    unsigned long parsed = std::stoul(key, &pos);
                    if (pos != key.size()) throw std::invalid_argument(key);
                    k = static_cast<uint32_t>(parsed);
                } catch (const std::exception&) {
                    throw ParseError(where + ": coefficient key '" + key + "' is not an index");
                }
                if (k >= n) throw ParseError(where + ": coefficient index out of range");
                if (!value.is_number_integer())
                    throw ParseError(where + ": coefficient values must be integers");
                coeffs.emplace_back(k, value.get<int64_t>());
            }
            if (i == j && i < table.dim_even) {
                const Fp f(table.p);
                for (auto [k, v] : coeffs)
                    if (f.reduce(v) != 0)
                        throw ParseError(where + ": even diagonal bracket must be absent or zero");
            }
            table.set_bracket(i, j, coeffs);
        }
    }

    ValidationResult r = validate(table, level);
    return ParsedAlgebra{r.algebra, std::move(r.report)};
}

ParsedAlgebra parse_algebra_file(const std::string& path, AxiomLevel level) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra(buffer.str(), level);
}

std::string emit_algebra(const SuperAlgebra& algebra) {
    json doc;
    doc["p"] = algebra.p();
    doc["dim_even"] = algebra.dim_even();
    doc["dim_odd"] = algebra.dim_odd();
    if (!algebra.basis_names().empty()) doc["basis_names"] = algebra.basis_names();
    json brackets = json::array();
    const uint32_t n = algebra.n();
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i; j < n; ++j) {
            json coeffs = json::object();
            for (uint32_t k = 0; k < n; ++k) {
                uint8_t v = algebra.table().at(i, j, k);
                if (v) coeffs[std::to_string(k)] = static_cast<int>(v);
            }
            if (!coeffs.empty()) brackets.push_back(json{{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    }
    doc["brackets"] = std::move(brackets);
    return doc.dump(2) + "\n";
}

std::string emit_graph(const SolvGraph& graph, GraphFormat format) {
    std::ostringstream os;
    const size_t m = graph.vertex_count();
    if (format == GraphFormat::Dot) {
        os << "graph " << (graph.kind == GraphKind::Solvable ? "solvable" : "nonsolvable") << " {\n";
        for (size_t i = 0; i < m; ++i)
            os << "  v" << i << " [label=\"" << graph.algebra->label(graph.vertices[i]) << "\"];\n";
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (graph.adjacent(a, b)) os << "  v" << a << " -- v" << b << ";\n";
        os << "}\n";
    } else {
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b)
                if (graph.adjacent(a, b)) os << a << "," << b << "\n";
    }
    return os.str();
}

}  // namespace solvgraph
