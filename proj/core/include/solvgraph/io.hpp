#pragma once

#include "solvgraph/graph.hpp"

namespace solvgraph {

/// Malformed definition documents (syntax or structure). Axiom violations
/// are reported through ParsedAlgebra instead.
class ParseError : public Error {
public:
    using Error::Error;
};

struct ParsedAlgebra {
    AlgebraPtr algebra;        // null when the document violates the axioms
    ValidationReport report;
};

/// Definition-file format: a JSON document with keys p, dim_even, dim_odd,
/// optional basis_names, and brackets as records {i, j, coeffs:{k: value}}
/// for i <= j only; the other triangle is reconstructed by super
/// skew-symmetry and absent pairs default to zero. Emission is canonical,
/// so parse(emit(L)) reproduces the table bit-exactly.
ParsedAlgebra parse_algebra(const std::string& text, AxiomLevel level = AxiomLevel::Standard);
ParsedAlgebra parse_algebra_file(const std::string& path, AxiomLevel level = AxiomLevel::Standard);

std::string emit_algebra(const SuperAlgebra& algebra);

enum class GraphFormat { Dot, EdgeCsv };

/// Deterministic export: DOT labels vertices with basis-combination strings
/// in lexicographic vertex order; CSV emits sorted "u,v" index pairs.
std::string emit_graph(const SolvGraph& graph, GraphFormat format);

}  // namespace solvgraph
