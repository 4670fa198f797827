#pragma once

#include "solvgraph/superalgebra.hpp"

namespace solvgraph {

/// A grading- and bracket-preserving linear map between superalgebras.
/// Row i of `matrix` holds the target coordinates of the image of source
/// basis vector e_i. Instances are validated on construction.
class Morphism {
public:
    Morphism(AlgebraPtr source, AlgebraPtr target, std::vector<Vec> matrix);

    static Morphism identity(AlgebraPtr algebra);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<Vec>& matrix() const { return matrix_; }

    Vec apply(const Vec& x) const;
    bool surjective() const { return surjective_; }
    bool injective() const { return kernel_.is_zero(); }
    const Subspace& kernel() const { return kernel_; }

    /// Image of a subspace under the map.
    Subspace image(const Subspace& s) const;
    Subspace image() const;

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<Vec> matrix_;
    Subspace kernel_;
    bool surjective_;
};

/// g after f; requires f.target == g.source structurally.
Morphism compose(const Morphism& g, const Morphism& f);

}  // namespace solvgraph
