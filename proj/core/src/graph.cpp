#include "solvgraph/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "solvgraph/constructions.hpp"
#include "solvgraph/parallel.hpp"

namespace solvgraph {

SolvGraph build_graph(const PairOracle& oracle, GraphKind kind, unsigned workers) {
    const SuperAlgebra& L = oracle.algebra();
    if (is_solvable(L, full_space(L)))
        throw Error("build_graph: graph undefined for a solvable algebra");

    ElementSet sol = solvabilizer(oracle, workers);
    std::vector<Vec> vertices;
    for (const Vec& v : all_vectors(L.field(), L.n())) {
        if (std::all_of(v.begin(), v.end(), [](uint8_t c) { return c == 0; })) continue;
        if (element_set_contains(sol, v)) continue;
        vertices.push_back(v);
    }
    if (vertices.empty()) throw Error("build_graph: empty vertex set");

    const size_t m = vertices.size();
    SolvGraph g;
    g.algebra = oracle.algebra_ptr();
    g.kind = kind;
    g.vertices = std::move(vertices);
    g.adj.assign(m * m, 0);

    const bool want_solvable = kind == GraphKind::Solvable;
    parallel_for(
        m, workers,
        [&](uint64_t begin, uint64_t end) {
            for (uint64_t a = begin; a < end; ++a) {
                for (size_t b = a + 1; b < m; ++b) {
                    bool solvable_pair = oracle.solvable(g.vertices[a], g.vertices[b]);
                    uint8_t bit = (solvable_pair == want_solvable) ? 1 : 0;
                    g.adj[a * m + b] = bit;
                    g.adj[b * m + a] = bit;
                }
            }
        },
        64);  // whole rows per item: engage threads early
    uint64_t edges = 0;
    for (size_t a = 0; a < m; ++a)
        for (size_t b = a + 1; b < m; ++b) edges += g.adj[a * m + b];
    g.edge_count = edges;
    return g;
}

Rational measure(const SolvGraph& graph) {
    if (graph.kind != GraphKind::Solvable)
        throw Error("measure: defined on the solvable graph");
    const int64_t v = static_cast<int64_t>(graph.vertex_count());
    if (v < 2) throw Error("measure: needs at least two vertices");
    return Rational(1) - Rational(2 * static_cast<int64_t>(graph.edge_count), v * (v - 1));
}

uint32_t component_count(const SolvGraph& graph) {
    const size_t m = graph.vertex_count();
    std::vector<uint8_t> seen(m, 0);
    uint32_t components = 0;
    std::vector<size_t> stack;
    for (size_t start = 0; start < m; ++start) {
        if (seen[start]) continue;
        ++components;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t w = 0; w < m; ++w) {
                if (!seen[w] && graph.adjacent(u, w)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

namespace {

std::vector<uint32_t> degrees(const SolvGraph& g) {
    const size_t m = g.vertex_count();
    std::vector<uint32_t> deg(m, 0);
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) deg[a] += g.adj[a * m + b];
    return deg;
}

// Signature = own degree plus sorted neighbor degrees; invariant under
// isomorphism, used to restrict candidate images.
std::vector<std::vector<uint32_t>> signatures(const SolvGraph& g,
                                              const std::vector<uint32_t>& deg) {
    const size_t m = g.vertex_count();
    std::vector<std::vector<uint32_t>> sig(m);
    for (size_t a = 0; a < m; ++a) {
        sig[a].push_back(deg[a]);
        std::vector<uint32_t> nd;
        for (size_t b = 0; b < m; ++b)
            if (g.adjacent(a, b)) nd.push_back(deg[b]);
        std::sort(nd.begin(), nd.end());
        sig[a].insert(sig[a].end(), nd.begin(), nd.end());
    }
    return sig;
}

bool extend(const SolvGraph& g1, const SolvGraph& g2, std::vector<int>& map12,
            std::vector<uint8_t>& used2, size_t next,
            const std::vector<std::vector<size_t>>& candidates) {
    const size_t m = g1.vertex_count();
    if (next == m) return true;
    for (size_t cand : candidates[next]) {
        if (used2[cand]) continue;
        bool ok = true;
        for (size_t prev = 0; prev < next; ++prev) {
            if (g1.adjacent(next, prev) != g2.adjacent(cand, static_cast<size_t>(map12[prev]))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map12[next] = static_cast<int>(cand);
        used2[cand] = 1;
        if (extend(g1, g2, map12, used2, next + 1, candidates)) return true;
        used2[cand] = 0;
        map12[next] = -1;
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(const SolvGraph& a, const SolvGraph& b, size_t vertex_cap) {
    if (a.vertex_count() > vertex_cap || b.vertex_count() > vertex_cap)
        throw Error("graphs_isomorphic: vertex count exceeds cap of " + std::to_string(vertex_cap));
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count != b.edge_count) return false;

    auto deg_a = degrees(a), deg_b = degrees(b);
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    auto sig_a = signatures(a, deg_a), sig_b = signatures(b, deg_b);
    {
        auto sa = sig_a, sb = sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    const size_t m = a.vertex_count();
    std::vector<std::vector<size_t>> candidates(m);
    for (size_t u = 0; u < m; ++u)
        for (size_t v = 0; v < m; ++v)
            if (sig_a[u] == sig_b[v]) candidates[u].push_back(v);

    std::vector<int> map12(m, -1);
    std::vector<uint8_t> used2(m, 0);
    return extend(a, b, map12, used2, 0, candidates);
}

int indicator(const PairOracle& oracle, const Vec& x, const Vec& y) {
    return oracle.solvable(x, y) ? 1 : 0;
}

MeasureFormulaInputs measure_formula_inputs(const PairOracle& oracle, unsigned workers) {
    SolvGraph g = build_graph(oracle, GraphKind::Solvable, workers);
    MeasureFormulaInputs in;
    in.a = static_cast<int64_t>(g.vertex_count());
    ElementSet sol = solvabilizer(oracle, workers);
    in.b = static_cast<int64_t>(sol.size());
    in.zero_in_sol = element_set_contains(sol, zero_vec(oracle.algebra().n()));
    if (in.a < 2) throw Error("measure_formula_inputs: need at least two vertices");
    in.alpha = Rational(1) - measure(g);
    int64_t own_solvable = 0;
    for (const Vec& v : g.vertices)
        if (oracle.solvable(v, v)) ++own_solvable;
    in.sigma = Rational(own_solvable, in.a);
    return in;
}

DirectSumMeasurePrediction predict_direct_sum_measure(const MeasureFormulaInputs& left,
                                                      const MeasureFormulaInputs& right) {
    const Rational a1(left.a), a2(right.a), b1(left.b), b2(right.b);
    const Rational &al1 = left.alpha, &al2 = right.alpha;
    const Rational &s1 = left.sigma, &s2 = right.sigma;
    const Rational half(1, 2);

    Rational q = half * a1 * a2 *
                     (al1 * al2 * (a1 - 1) * (a2 - 1) + s1 * al2 * (a2 - 1) + al1 * s2 * (a1 - 1)) +
                 half * a1 * b2 * (al1 * b2 * (a1 - 1) + s1 * (b2 - 1)) +
                 half * a2 * b1 * (al2 * b1 * (a2 - 1) + s2 * (b1 - 1)) +
                 a1 * a2 * b2 * (al1 * (a1 - 1) + s1) +
                 a1 * a2 * b1 * (al2 * (a2 - 1) + s2) +
                 a1 * a2 * b1 * b2;

    DirectSumMeasurePrediction out;
    out.vertex_count = left.a * right.a + left.a * right.b + left.b * right.a;
    out.q = q;
    const Rational v(out.vertex_count);
    out.nu = Rational(1) - Rational(2) * q / (v * (v - 1));
    return out;
}

std::string DirectSumMeasureReport::to_string() const {
    std::ostringstream os;
    os << "direct-sum measure comparison\n";
    os << "  inputs: a1=" << left.a << " b1=" << left.b << " alpha1=" << left.alpha.to_string()
       << " sigma1=" << left.sigma.to_string() << " zero_in_sol1=" << (left.zero_in_sol ? "yes" : "no")
       << "\n";
    os << "          a2=" << right.a << " b2=" << right.b << " alpha2=" << right.alpha.to_string()
       << " sigma2=" << right.sigma.to_string() << " zero_in_sol2="
       << (right.zero_in_sol ? "yes" : "no") << "\n";
    os << "  predicted: |V|=" << predicted.vertex_count << " Q=" << predicted.q.to_string()
       << " nu=" << predicted.nu.pretty() << "\n";
    os << "  actual:    |V|=" << actual_vertex_count;
    if (edges_computed)
        os << " |E|=" << actual_edge_count << " nu=" << actual_nu.pretty();
    os << "\n";
    os << "  vertex formula " << (vertex_match ? "matches" : "differs")
       << " (exact when 0 lies in sol of both summands)";
    if (edges_computed)
        os << "; edge formula " << (edge_match ? "matches" : "differs") << "; nu "
           << (nu_match ? "matches" : "differs");
    os << "\n";
    return os.str();
}

DirectSumMeasureReport compare_direct_sum_measure(const PairOracle& left, const PairOracle& right,
                                                  bool with_edges, unsigned workers) {
    DirectSumMeasureReport report;
    report.left = measure_formula_inputs(left, workers);
    report.right = measure_formula_inputs(right, workers);
    report.predicted = predict_direct_sum_measure(report.left, report.right);

    DirectSum sum = direct_sum(left.algebra_ptr(), right.algebra_ptr());
    PairOracle sum_oracle(sum.algebra, left.mode());
    if (with_edges) {
        SolvGraph g = build_graph(sum_oracle, GraphKind::Solvable, workers);
        report.actual_vertex_count = static_cast<int64_t>(g.vertex_count());
        report.edges_computed = true;
        report.actual_edge_count = g.edge_count;
        report.actual_nu = measure(g);
        report.edge_match = Rational(static_cast<int64_t>(g.edge_count)) == report.predicted.q;
        report.nu_match = report.actual_nu == report.predicted.nu;
    } else {
        ElementSet sol = solvabilizer(sum_oracle, workers);
        size_t total = 1;
        for (uint32_t i = 0; i < sum.algebra->n(); ++i) total *= sum.algebra->p();
        bool zero_in = element_set_contains(sol, zero_vec(sum.algebra->n()));
        report.actual_vertex_count =
            static_cast<int64_t>(total - sol.size() - (zero_in ? 0 : 1));
    }
    report.vertex_match = report.actual_vertex_count == report.predicted.vertex_count;
    return report;
}

}  // namespace solvgraph
