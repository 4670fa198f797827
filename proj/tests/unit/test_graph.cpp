#include <doctest.h>

#include <set>

#include <solvgraph/catalog.hpp>
#include <solvgraph/graph.hpp>
#include <solvgraph/verify.hpp>

using namespace solvgraph;

namespace {

// Independent edge oracle on element sets: spans and bracket closures are
// computed as explicit sets of vectors, with no shared code with the RREF
// machinery in the library.
std::set<Vec> set_span(const SuperAlgebra& L, std::set<Vec> s) {
    const Fp& f = L.field();
    s.insert(Vec(L.n(), 0));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> members(s.begin(), s.end());
        for (const Vec& a : members) {
            for (uint8_t lambda = 1; lambda < L.p(); ++lambda) {
                Vec scaled(L.n());
                for (uint32_t t = 0; t < L.n(); ++t) scaled[t] = f.mul(lambda, a[t]);
                if (s.insert(scaled).second) grew = true;
            }
            for (const Vec& b : members) {
                Vec add(L.n());
                for (uint32_t t = 0; t < L.n(); ++t) add[t] = f.add(a[t], b[t]);
                if (s.insert(add).second) grew = true;
            }
        }
    }
    return s;
}

std::set<Vec> set_bracket_closure(const SuperAlgebra& L, std::set<Vec> s) {
    s = set_span(L, std::move(s));
    while (true) {
        std::set<Vec> next = s;
        for (const Vec& a : s)
            for (const Vec& b : s) next.insert(L.bracket(a, b));
        next = set_span(L, std::move(next));
        if (next == s) return s;
        s = std::move(next);
    }
}

bool set_solvable(const SuperAlgebra& L, const std::set<Vec>& closed) {
    std::set<Vec> cur = closed;
    const std::set<Vec> zero_only{Vec(L.n(), 0)};
    while (true) {
        std::set<Vec> derived;
        for (const Vec& a : cur)
            for (const Vec& b : cur) derived.insert(L.bracket(a, b));
        derived = set_span(L, std::move(derived));
        if (derived == zero_only) return true;
        if (derived == cur) return false;
        cur = std::move(derived);
    }
}

bool oracle_edge(const SuperAlgebra& L, const Vec& a, const Vec& b) {
    return set_solvable(L, set_bracket_closure(L, {a, b}));
}

const Vec kH{1, 0, 0}, kX{0, 1, 0}, kY{0, 0, 1};

}  // namespace

TEST_CASE("weight-pair algebra graph: frozen invariants") {
    PairOracle oracle(catalog_algebra("E2@3"));
    SolvGraph g = build_graph(oracle, GraphKind::Solvable);
    CHECK(g.vertex_count() == 26);
    CHECK(g.edge_count == 55);
    CHECK(measure(g) == Rational(54, 65));
    CHECK(component_count(g) == 13);

    SolvGraph gc = build_graph(oracle, GraphKind::NonSolvable);
    CHECK(gc.vertex_count() == 26);
    CHECK(gc.edge_count == 26 * 25 / 2 - 55);
    CHECK(component_count(gc) == 1);

    // complementarity on every pair
    for (size_t a = 0; a < g.vertex_count(); ++a)
        for (size_t b = a + 1; b < g.vertex_count(); ++b)
            CHECK(g.adjacent(a, b) != gc.adjacent(a, b));

    // named edges
    auto index_of = [&](const Vec& v) {
        return std::lower_bound(g.vertices.begin(), g.vertices.end(), v) - g.vertices.begin();
    };
    CHECK(g.adjacent(index_of(kH), index_of(kX)));
    CHECK_FALSE(g.adjacent(index_of(kX), index_of(kY)));
    CHECK(gc.adjacent(index_of(kX), index_of(kY)));
}

TEST_CASE("adjacency agrees with the element-set edge oracle") {
    AlgebraPtr L = catalog_algebra("E2@3");
    PairOracle oracle(L);
    SolvGraph g = build_graph(oracle, GraphKind::Solvable);
    for (size_t a = 0; a < g.vertex_count(); ++a)
        for (size_t b = a + 1; b < g.vertex_count(); ++b)
            CHECK(g.adjacent(a, b) == oracle_edge(*L, g.vertices[a], g.vertices[b]));
}

TEST_CASE("graph preconditions") {
    PairOracle solvable_oracle(catalog_algebra("E1@3"));
    CHECK_THROWS_WITH_AS(build_graph(solvable_oracle, GraphKind::Solvable),
                         doctest::Contains("solvable"), Error);

    PairOracle oracle(catalog_algebra("E2@3"));
    SolvGraph gc = build_graph(oracle, GraphKind::NonSolvable);
    CHECK_THROWS_AS(measure(gc), Error);
}

TEST_CASE("frozen values for the purely even catalog algebras") {
    PairOracle o_sl2(catalog_algebra("sl2@3"));
    SolvGraph g_sl2 = build_graph(o_sl2, GraphKind::Solvable);
    CHECK(g_sl2.vertex_count() == 26);
    CHECK(g_sl2.edge_count == 109);
    CHECK(measure(g_sl2) == Rational(216, 325));

    PairOracle o_gl(catalog_algebra("gl2split@3"));
    SolvGraph g_gl = build_graph(o_gl, GraphKind::Solvable);
    CHECK(g_gl.vertex_count() == 78);
    CHECK(g_gl.edge_count == 1059);
    CHECK(measure(g_gl) == Rational(648, 1001));

    // the projection is 3-to-1 on vertices and strictly increases nu
    CHECK(g_gl.vertex_count() == 3 * g_sl2.vertex_count());
    CHECK(measure(g_sl2) > measure(g_gl));
}

TEST_CASE("weight-pair algebra over GF(5)") {
    PairOracle oracle(catalog_algebra("E2@5"));
    CHECK(solvabilizer(oracle).empty());
    SolvGraph g = build_graph(oracle, GraphKind::Solvable);
    CHECK(g.vertex_count() == 124);
    CHECK(g.edge_count == 546);
    CHECK(measure(g) == Rational(1180, 1271));
}

TEST_CASE("graph isomorphism") {
    PairOracle oracle(catalog_algebra("E2@3"));
    SolvGraph g = build_graph(oracle, GraphKind::Solvable);

    SUBCASE("a graph is isomorphic to itself") { CHECK(graphs_isomorphic(g, g)); }

    SUBCASE("image under the swap automorphism") {
        const Morphism& swap = catalog_morphism("E2@3.swap");
        // rebuild the adjacency with vertices permuted by the automorphism
        SolvGraph permuted = g;
        std::vector<size_t> rank(g.vertex_count());
        for (size_t i = 0; i < g.vertex_count(); ++i) {
            Vec w = swap.apply(g.vertices[i]);
            rank[i] = std::lower_bound(g.vertices.begin(), g.vertices.end(), w) -
                      g.vertices.begin();
        }
        const size_t m = g.vertex_count();
        std::fill(permuted.adj.begin(), permuted.adj.end(), 0);
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b)
                permuted.adj[rank[a] * m + rank[b]] = g.adj[a * m + b];
        CHECK(graphs_isomorphic(g, permuted));
    }

    SUBCASE("size mismatch is decided without search") {
        PairOracle o5(catalog_algebra("E2@5"));
        SolvGraph g5 = build_graph(o5, GraphKind::Solvable);
        CHECK_FALSE(graphs_isomorphic(g, g5, 128));
    }

    SUBCASE("vertex cap") {
        PairOracle o_gl(catalog_algebra("gl2split@3"));
        SolvGraph g_gl = build_graph(o_gl, GraphKind::Solvable);
        CHECK_THROWS_WITH_AS(graphs_isomorphic(g_gl, g_gl), doctest::Contains("cap"), Error);
        CHECK(graphs_isomorphic(g_gl, g_gl, 100));
    }

    SUBCASE("same degree data, different graphs") {
        // path P4 vs star K1,3 share vertex count but not degree data; use
        // hand-built graphs to exercise the pruner
        SolvGraph p4, star;
        p4.vertices = star.vertices = {Vec{0}, Vec{1}, Vec{2}, Vec{3}};
        p4.algebra = star.algebra = catalog_algebra("E2@3");
        p4.adj.assign(16, 0);
        star.adj.assign(16, 0);
        auto link = [](SolvGraph& gr, size_t a, size_t b) {
            gr.adj[a * 4 + b] = gr.adj[b * 4 + a] = 1;
            gr.edge_count++;
        };
        link(p4, 0, 1);
        link(p4, 1, 2);
        link(p4, 2, 3);
        link(star, 0, 1);
        link(star, 0, 2);
        link(star, 0, 3);
        CHECK_FALSE(graphs_isomorphic(p4, star));
    }
}

TEST_CASE("indicator") {
    PairOracle oracle(catalog_algebra("E2@3"));
    CHECK(indicator(oracle, kH, kX) == 1);
    CHECK(indicator(oracle, kX, kY) == 0);

    // product rule over a seeded sample of pairs in the direct sum
    DirectSum ds = direct_sum(catalog_algebra("E2@3"), catalog_algebra("E1@3"));
    PairOracle o_sum(ds.algebra);
    PairOracle o_left(catalog_algebra("E2@3")), o_right(catalog_algebra("E1@3"));
    const auto universe = all_vectors(ds.algebra->field(), ds.algebra->n());
    SplitMix64 rng(422);
    for (int i = 0; i < 3000; ++i) {
        const Vec& u = universe[rng.below(universe.size())];
        const Vec& v = universe[rng.below(universe.size())];
        auto [u1, u2] = ds.split(u);
        auto [v1, v2] = ds.split(v);
        CHECK(indicator(o_sum, u, v) ==
              indicator(o_left, u1, v1) * indicator(o_right, u2, v2));
    }
}

TEST_CASE("measure endpoints characterize complete and edgeless graphs") {
    for (const char* name : {"E2@3", "E2@5", "sl2@3", "gl2split@3"}) {
        PairOracle oracle(catalog_algebra(name));
        SolvGraph g = build_graph(oracle, GraphKind::Solvable);
        const uint64_t m = g.vertex_count();
        const uint64_t complete = m * (m - 1) / 2;
        CHECK((measure(g) == Rational(0)) == (g.edge_count == complete));
        CHECK((measure(g) == Rational(1)) == (g.edge_count == 0));
    }
    // synthetic endpoints through the same formula
    SolvGraph complete_graph, edgeless;
    complete_graph.algebra = edgeless.algebra = catalog_algebra("E2@3");
    complete_graph.vertices = edgeless.vertices = {Vec{0}, Vec{1}, Vec{2}};
    complete_graph.adj = {0, 1, 1, 1, 0, 1, 1, 1, 0};
    complete_graph.edge_count = 3;
    edgeless.adj.assign(9, 0);
    CHECK(measure(complete_graph) == Rational(0));
    CHECK(measure(edgeless) == Rational(1));
    CHECK(component_count(complete_graph) == 1);
    CHECK(component_count(edgeless) == 3);
}

TEST_CASE("iso-invariance across seeded graded basis changes") {
    AlgebraPtr L = catalog_algebra("E2@3");
    PairOracle oracle(L);
    SolvGraph g = build_graph(oracle, GraphKind::Solvable);
    const Rational nu = measure(g);
    SplitMix64 rng(31);
    int produced = 0;
    while (produced < 5) {
        std::vector<Vec> rows(3, Vec(3, 0));
        for (uint32_t i = 0; i < 3; ++i)
            for (uint32_t k = 0; k < 3; ++k)
                if (L->parity(i) == L->parity(k)) rows[i][k] = static_cast<uint8_t>(rng.below(3));
        if (!matrix_inverse(L->field(), rows)) continue;
        Transported t = transport_basis(L, rows);
        ++produced;
        PairOracle o2(t.algebra);
        SolvGraph g2 = build_graph(o2, GraphKind::Solvable);
        CHECK(measure(g2) == nu);
        CHECK(graphs_isomorphic(g, g2));
    }
}

TEST_CASE("adjacency does not depend on the worker count") {
    PairOracle oracle(catalog_algebra("gl2split@3"));
    SolvGraph serial = build_graph(oracle, GraphKind::Solvable, 1);
    PairOracle oracle4(catalog_algebra("gl2split@3"));
    SolvGraph parallel = build_graph(oracle4, GraphKind::Solvable, 4);
    CHECK(serial.vertices == parallel.vertices);
    CHECK(serial.adj == parallel.adj);
    CHECK(serial.edge_count == parallel.edge_count);
}

TEST_CASE("direct-sum measure formula") {
    PairOracle o_e2(catalog_algebra("E2@3"));

    SUBCASE("formula inputs for the weight-pair algebra") {
        MeasureFormulaInputs in = measure_formula_inputs(o_e2);
        CHECK(in.a == 26);
        CHECK(in.b == 0);
        CHECK_FALSE(in.zero_in_sol);
        CHECK(in.alpha == Rational(11, 65));
        CHECK(in.sigma == Rational(7, 13));
    }

    SUBCASE("prediction for the doubled weight-pair algebra") {
        MeasureFormulaInputs in = measure_formula_inputs(o_e2);
        DirectSumMeasurePrediction pred = predict_direct_sum_measure(in, in);
        CHECK(pred.vertex_count == 676);
        CHECK(pred.q == Rational(7590));
        CHECK(pred.nu == Rational(7352, 7605));
    }

    SUBCASE("vertex formula matches when zero lies in both solvabilizers") {
        PairOracle o_gl(catalog_algebra("gl2split@3"));
        DirectSumMeasureReport report = compare_direct_sum_measure(o_gl, o_gl, false, 2);
        CHECK(report.left.zero_in_sol);
        CHECK(report.predicted.vertex_count == 6552);
        CHECK(report.actual_vertex_count == 6552);
        CHECK(report.vertex_match);
    }

    SUBCASE("a right summand with no solvable subalgebras predicts nu = 1") {
        MeasureFormulaInputs left = measure_formula_inputs(o_e2);
        MeasureFormulaInputs right;
        right.a = 26;
        right.b = 0;
        right.alpha = Rational(0);  // edgeless solvable graph
        right.sigma = Rational(0);  // no element generates a solvable subalgebra
        right.zero_in_sol = false;
        DirectSumMeasurePrediction pred = predict_direct_sum_measure(left, right);
        CHECK(pred.q == Rational(0));
        CHECK(pred.nu == Rational(1));
    }
}

TEST_CASE("catalog lookups reject unknown names") {
    CHECK_THROWS_WITH_AS(catalog_algebra("no-such-algebra"), doctest::Contains("unknown"), Error);
    CHECK_THROWS_WITH_AS(catalog_morphism("no-such-morphism"), doctest::Contains("unknown"), Error);
    CHECK(catalog_has_algebra("E2@3"));
    CHECK_FALSE(catalog_has_algebra("E9@3"));
}
