#pragma once

#include <mutex>
#include <optional>
#include <unordered_map>

#include "solvgraph/superalgebra.hpp"

namespace solvgraph {

/// Memoized answers to "is the subalgebra generated by {x, z} solvable /
/// nilpotent". The generated subalgebra depends only on span{x, z}, so the
/// cache is keyed by the RREF of that span (dimension at most 2); this is
/// the lever that collapses the p^{2n} pair checks to one closure per small
/// subspace. Thread-safe; concurrent duplicate inserts write identical
/// values, so races are benign.
class PairOracle {
public:
    explicit PairOracle(AlgebraPtr algebra, ClosureMode mode = ClosureMode::Plain)
        : algebra_(std::move(algebra)), mode_(mode) {}

    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const SuperAlgebra& algebra() const { return *algebra_; }
    ClosureMode mode() const { return mode_; }

    bool solvable(const Vec& x, const Vec& z) const;
    bool nilpotent(const Vec& x, const Vec& z) const;

    /// Solvability of the subalgebra generated by the span alone.
    bool span_solvable(const Subspace& span) const;

    size_t cache_size() const;

    /// Harness self-test hook: solvability queries touching the span of
    /// {x, z} alternate between the negated and the true answer and are
    /// never cached, so redundant computation paths disagree. Deterministic
    /// for a fixed query order.
    void mark_unstable_for_tests(const Vec& x, const Vec& z);

private:
    bool lookup(const Subspace& key, bool nilpotency) const;

    AlgebraPtr algebra_;
    ClosureMode mode_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Subspace, bool, SubspaceHash> solvable_;
    mutable std::unordered_map<Subspace, bool, SubspaceHash> nilpotent_;
    mutable std::vector<std::pair<Subspace, bool>> unstable_;  // key, already fired
};

/// Deterministic, lexicographically sorted element list without duplicates.
using ElementSet = std::vector<Vec>;

ElementSet sorted_unique(std::vector<Vec> elements);
bool element_set_contains(const ElementSet& set, const Vec& v);
ElementSet element_set_intersection(const ElementSet& a, const ElementSet& b);
bool element_subset(const ElementSet& a, const ElementSet& b);

/// sol_L(z): every x in L whose pair with z generates a solvable subalgebra.
ElementSet solvabilizer_of(const PairOracle& oracle, const Vec& z, unsigned workers = 1);

/// sol_A(B). Conventions: sol_{}(B) = {}; sol_A({}) keeps the x in A with
/// <x> solvable; otherwise the intersection over z in B of sol_A(z).
ElementSet solvabilizer_rel(const PairOracle& oracle, const ElementSet& A, const ElementSet& B);

/// sol(L): direct double loop with early exit per candidate. When the pair
/// matrix is small enough the result is re-derived from the intersection
/// formula as a built-in consistency check.
ElementSet solvabilizer(const PairOracle& oracle, unsigned workers = 1);

ElementSet nilpotentizer_of(const PairOracle& oracle, const Vec& z, unsigned workers = 1);
ElementSet nilpotentizer_rel(const PairOracle& oracle, const ElementSet& A, const ElementSet& B);
ElementSet nilpotentizer(const PairOracle& oracle, unsigned workers = 1);

/// sol of a bracket-closed subspace computed intrinsically: candidates and
/// partners both range over the elements of the subspace.
ElementSet solvabilizer_within(const PairOracle& oracle, const Subspace& closed_subspace);

/// All inclusion-maximal bracket-closed solvable subspaces, optionally
/// filtered to those containing a given element. Enumerates every subspace,
/// so it is capped at n <= 4, p <= 5 and errors above that.
std::vector<Subalg> maximal_solvable_subalgebras(const PairOracle& oracle,
                                                 const std::optional<Vec>& containing = {});

}  // namespace solvgraph
