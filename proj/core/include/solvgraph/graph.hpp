#pragma once

#include "solvgraph/rational.hpp"
#include "solvgraph/solvabilizer.hpp"

namespace solvgraph {

enum class GraphKind { Solvable, NonSolvable };

/// Graph on the elements outside sol(L) and 0. In the Solvable kind two
/// distinct vertices are adjacent when the subalgebra they generate is
/// solvable; the NonSolvable kind is the exact complement on the same
/// vertex list. Immutable once built.
struct SolvGraph {
    AlgebraPtr algebra;
    GraphKind kind = GraphKind::Solvable;
    std::vector<Vec> vertices;   // lexicographically sorted
    std::vector<uint8_t> adj;    // symmetric |V| x |V|, zero diagonal
    uint64_t edge_count = 0;

    size_t vertex_count() const { return vertices.size(); }
    bool adjacent(size_t a, size_t b) const { return adj[a * vertices.size() + b] != 0; }
};

/// Errors when the algebra is solvable (the graph is undefined then) or the
/// vertex set comes out empty.
SolvGraph build_graph(const PairOracle& oracle, GraphKind kind, unsigned workers = 1);

/// nu = 1 - 2|E| / (|V| (|V|-1)) on the solvable kind; needs |V| >= 2.
Rational measure(const SolvGraph& graph);

uint32_t component_count(const SolvGraph& graph);

/// Exact isomorphism test by backtracking with degree and
/// neighborhood-degree-multiset pruning. Errors above the vertex cap.
bool graphs_isomorphic(const SolvGraph& a, const SolvGraph& b, size_t vertex_cap = 64);

/// 1 when the subalgebra generated by {x, y} is solvable, else 0.
int indicator(const PairOracle& oracle, const Vec& x, const Vec& y);

/// Per-summand quantities feeding the direct-sum measure formula:
/// a = |V|, b = |sol|, alpha = 1 - nu, sigma = fraction of vertices that
/// generate a solvable subalgebra on their own.
struct MeasureFormulaInputs {
    int64_t a = 0;
    int64_t b = 0;
    Rational alpha;
    Rational sigma;
    bool zero_in_sol = false;
};

MeasureFormulaInputs measure_formula_inputs(const PairOracle& oracle, unsigned workers = 1);

struct DirectSumMeasurePrediction {
    int64_t vertex_count = 0;
    Rational q;   // predicted edge count
    Rational nu;
};

/// The formula is unproven at this generality, so it is evaluated exactly
/// and compared per instance rather than trusted.
DirectSumMeasurePrediction predict_direct_sum_measure(const MeasureFormulaInputs& left,
                                                      const MeasureFormulaInputs& right);

struct DirectSumMeasureReport {
    MeasureFormulaInputs left;
    MeasureFormulaInputs right;
    DirectSumMeasurePrediction predicted;
    int64_t actual_vertex_count = 0;
    bool vertex_match = false;
    // edge data only when the graph of the sum was built
    bool edges_computed = false;
    uint64_t actual_edge_count = 0;
    Rational actual_nu;
    bool edge_match = false;
    bool nu_match = false;
    std::string to_string() const;
};

/// Evaluates the formula on L1+L2 and compares against the ground truth.
/// The vertex count is always compared; edges only with `with_edges` (the
/// costly part). The vertex formula is expected to match exactly when 0 is
/// in sol of both summands.
DirectSumMeasureReport compare_direct_sum_measure(const PairOracle& left, const PairOracle& right,
                                                  bool with_edges, unsigned workers = 1);

}  // namespace solvgraph
