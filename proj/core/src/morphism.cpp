#include "solvgraph/morphism.hpp"

#include <algorithm>

namespace solvgraph {

Morphism::Morphism(AlgebraPtr source, AlgebraPtr target, std::vector<Vec> matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)),
      kernel_(source_->field(), source_->n()),
      surjective_(false) {
    if (source_->p() != target_->p()) throw Error("morphism: source/target field mismatch");
    if (matrix_.size() != source_->n()) throw Error("morphism: one matrix row per source basis vector expected");
    for (const Vec& row : matrix_)
        if (row.size() != target_->n()) throw Error("morphism: matrix row length must match target dimension");

    // Grading: even basis vectors land in the even part, odd in the odd part.
    for (uint32_t i = 0; i < source_->n(); ++i)
        for (uint32_t k = 0; k < target_->n(); ++k)
            if (matrix_[i][k] != 0 && target_->parity(k) != source_->parity(i))
                throw Error("morphism: grading not preserved at source index " + std::to_string(i));

    // Bracket preserved on all basis pairs.
    for (uint32_t i = 0; i < source_->n(); ++i) {
        for (uint32_t j = 0; j < source_->n(); ++j) {
            Vec lhs = apply(source_->bracket(unit_vec(source_->n(), i), unit_vec(source_->n(), j)));
            Vec rhs = target_->bracket(matrix_[i], matrix_[j]);
            if (lhs != rhs)
                throw Error("morphism: bracket not preserved on basis pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
        }
    }

    surjective_ = matrix_rank(target_->field(), target_->n(), matrix_) == target_->n();
    // kernel = { x : sum_i x_i matrix[i] = 0 }, the null space of the transpose
    std::vector<Vec> transpose(target_->n(), Vec(source_->n(), 0));
    for (uint32_t i = 0; i < source_->n(); ++i)
        for (uint32_t k = 0; k < target_->n(); ++k) transpose[k][i] = matrix_[i][k];
    kernel_ = null_space(source_->field(), source_->n(), transpose);
}

Morphism Morphism::identity(AlgebraPtr algebra) {
    std::vector<Vec> rows;
    for (uint32_t i = 0; i < algebra->n(); ++i) rows.push_back(unit_vec(algebra->n(), i));
    return Morphism(algebra, algebra, std::move(rows));
}

Vec Morphism::apply(const Vec& x) const {
    if (x.size() != source_->n()) throw Error("morphism: element dimension mismatch");
    const Fp& f = target_->field();
    Vec out(target_->n(), 0);
    for (uint32_t i = 0; i < source_->n(); ++i) {
        if (x[i] == 0) continue;
        for (uint32_t k = 0; k < target_->n(); ++k)
            out[k] = f.add(out[k], f.mul(x[i], matrix_[i][k]));
    }
    return out;
}

Subspace Morphism::image(const Subspace& s) const {
    std::vector<Vec> rows;
    for (const Vec& b : s.basis()) rows.push_back(apply(b));
    return Subspace::span(target_->field(), target_->n(), rows);
}

Subspace Morphism::image() const {
    return Subspace::span(target_->field(), target_->n(), matrix_);
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(*f.target() == *g.source())) throw Error("compose: middle algebras do not match");
    std::vector<Vec> rows;
    rows.reserve(f.source()->n());
    for (const Vec& row : f.matrix()) rows.push_back(g.apply(row));
    return Morphism(f.source(), g.target(), std::move(rows));
}

}  // namespace solvgraph
