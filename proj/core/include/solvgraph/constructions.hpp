#pragma once

#include "solvgraph/morphism.hpp"

namespace solvgraph {

/// L + M with cross-brackets zero. Basis order: even vectors of L, even of
/// M, odd of L, odd of M, so parities stay contiguous.
struct DirectSum {
    AlgebraPtr algebra;
    Morphism inject_left;
    Morphism inject_right;
    Morphism project_left;
    Morphism project_right;

    /// Ambient index of basis vector i of the left (right) summand.
    std::vector<uint32_t> left_index;
    std::vector<uint32_t> right_index;

    Vec embed(const Vec& left, const Vec& right) const;
    std::pair<Vec, Vec> split(const Vec& v) const;
};

DirectSum direct_sum(AlgebraPtr left, AlgebraPtr right);

/// L / J for a graded ideal J. The quotient basis is the lexicographically
/// first graded complement drawn from the standard basis (the non-pivot
/// coordinates of J), so output is deterministic.
struct Quotient {
    AlgebraPtr algebra;
    Morphism projection;  // kernel is exactly J
};

Quotient quotient(AlgebraPtr L, const Subspace& ideal);

/// Fiber product of f : L -> M and g : N -> M inside L + N, with its two
/// projections. Requires f and g surjective with the same target.
struct Pullback {
    AlgebraPtr algebra;
    Morphism project_left;    // P -> L
    Morphism project_right;   // P -> N
    Morphism embed;           // P -> L + N
    DirectSum ambient;
};

Pullback pullback(const Morphism& f, const Morphism& g);

/// The same algebra written on a new graded basis; `new_basis` rows are the
/// new basis vectors in old coordinates (even rows first). Returns the
/// rewritten algebra and the isomorphism from it onto L.
struct Transported {
    AlgebraPtr algebra;
    Morphism iso;  // transported -> L
};

Transported transport_basis(AlgebraPtr L, const std::vector<Vec>& new_basis);

}  // namespace solvgraph
