#include "solvgraph/constructions.hpp"

#include <algorithm>
#include <set>

namespace solvgraph {

Vec DirectSum::embed(const Vec& left, const Vec& right) const {
    Vec out(algebra->n(), 0);
    for (size_t i = 0; i < left.size(); ++i) out[left_index[i]] = left[i];
    for (size_t i = 0; i < right.size(); ++i) out[right_index[i]] = right[i];
    return out;
}

std::pair<Vec, Vec> DirectSum::split(const Vec& v) const {
    Vec l(left_index.size(), 0), r(right_index.size(), 0);
    for (size_t i = 0; i < left_index.size(); ++i) l[i] = v[left_index[i]];
    for (size_t i = 0; i < right_index.size(); ++i) r[i] = v[right_index[i]];
    return {std::move(l), std::move(r)};
}

DirectSum direct_sum(AlgebraPtr left, AlgebraPtr right) {
    if (left->p() != right->p()) throw Error("direct_sum: field mismatch");
    const uint32_t d0 = left->dim_even() + right->dim_even();
    const uint32_t d1 = left->dim_odd() + right->dim_odd();
    BracketTable table = BracketTable::zero(left->p(), d0, d1);
    const uint32_t n = table.n();

    std::vector<uint32_t> li(left->n()), ri(right->n());
    for (uint32_t i = 0; i < left->n(); ++i)
        li[i] = i < left->dim_even() ? i : d0 + (i - left->dim_even());
    for (uint32_t i = 0; i < right->n(); ++i)
        ri[i] = i < right->dim_even() ? left->dim_even() + i
                                      : d0 + left->dim_odd() + (i - right->dim_even());

    auto copy_block = [&](const SuperAlgebra& a, const std::vector<uint32_t>& emb) {
        for (uint32_t i = 0; i < a.n(); ++i)
            for (uint32_t j = 0; j < a.n(); ++j)
                for (uint32_t k = 0; k < a.n(); ++k)
                    if (a.table().at(i, j, k))
                        table.at(emb[i], emb[j], emb[k]) = a.table().at(i, j, k);
    };
    copy_block(*left, li);
    copy_block(*right, ri);

    if (!left->basis_names().empty() || !right->basis_names().empty()) {
        std::vector<std::string> names(n);
        for (uint32_t i = 0; i < left->n(); ++i) names[li[i]] = left->basis_name(i);
        for (uint32_t i = 0; i < right->n(); ++i) names[ri[i]] = right->basis_name(i);
        std::set<std::string> unique(names.begin(), names.end());
        if (unique.size() != names.size()) {
            for (uint32_t i = 0; i < left->n(); ++i) names[li[i]] += ".1";
            for (uint32_t i = 0; i < right->n(); ++i) names[ri[i]] += ".2";
        }
        table.basis_names = std::move(names);
    }

    AlgebraPtr sum = make_algebra(table);

    auto inj_matrix = [&](const SuperAlgebra& a, const std::vector<uint32_t>& emb) {
        std::vector<Vec> rows;
        for (uint32_t i = 0; i < a.n(); ++i) rows.push_back(unit_vec(n, emb[i]));
        return rows;
    };
    auto proj_matrix = [&](const SuperAlgebra& a, const std::vector<uint32_t>& emb) {
        std::vector<Vec> rows(n, Vec(a.n(), 0));
        for (uint32_t i = 0; i < a.n(); ++i) rows[emb[i]][i] = 1;
        return rows;
    };

    return DirectSum{sum,
                     Morphism(left, sum, inj_matrix(*left, li)),
                     Morphism(right, sum, inj_matrix(*right, ri)),
                     Morphism(sum, left, proj_matrix(*left, li)),
                     Morphism(sum, right, proj_matrix(*right, ri)),
                     std::move(li),
                     std::move(ri)};
}

Quotient quotient(AlgebraPtr L, const Subspace& ideal) {
    if (ideal.ambient_dim() != L->n() || ideal.p() != L->p())
        throw Error("quotient: subspace does not live in the algebra");
    if (!is_parity_split(*L, ideal)) throw Error("quotient: subspace is not graded");
    if (!is_ideal(*L, ideal)) throw Error("quotient: subspace is not an ideal");

    auto pivots = ideal.pivot_columns();
    std::vector<bool> is_piv(L->n(), false);
    for (uint32_t c : pivots) is_piv[c] = true;
    std::vector<uint32_t> comp;  // complement = non-pivot standard indices, in order
    for (uint32_t i = 0; i < L->n(); ++i)
        if (!is_piv[i]) comp.push_back(i);

    uint32_t q0 = 0;
    for (uint32_t c : comp)
        if (L->parity(c) == 0) ++q0;
    const uint32_t qn = static_cast<uint32_t>(comp.size());

    BracketTable table = BracketTable::zero(L->p(), q0, qn - q0);
    auto to_quotient = [&](const Vec& v) {
        Vec reduced = ideal.reduce_mod(v);
        Vec out(qn, 0);
        for (uint32_t t = 0; t < qn; ++t) out[t] = reduced[comp[t]];
        return out;
    };
    for (uint32_t a = 0; a < qn; ++a) {
        for (uint32_t b = 0; b < qn; ++b) {
            Vec w = to_quotient(L->bracket(unit_vec(L->n(), comp[a]), unit_vec(L->n(), comp[b])));
            for (uint32_t k = 0; k < qn; ++k) table.at(a, b, k) = w[k];
        }
    }
    if (!L->basis_names().empty()) {
        std::vector<std::string> names;
        for (uint32_t c : comp) names.push_back(L->basis_name(c));
        table.basis_names = std::move(names);
    }
    AlgebraPtr Q = make_algebra(table);

    std::vector<Vec> proj_rows;
    for (uint32_t i = 0; i < L->n(); ++i) proj_rows.push_back(to_quotient(unit_vec(L->n(), i)));
    return Quotient{Q, Morphism(L, Q, std::move(proj_rows))};
}

Pullback pullback(const Morphism& f, const Morphism& g) {
    if (!(*f.target() == *g.target())) throw Error("pullback: targets do not match");
    if (!f.surjective() || !g.surjective()) throw Error("pullback: both maps must be surjective");

    DirectSum amb = direct_sum(f.source(), g.source());
    const uint32_t nd = amb.algebra->n();
    const uint32_t nm = f.target()->n();
    const Fp& field = amb.algebra->field();

    // One linear condition per target coordinate: f(x) - g(y) = 0.
    std::vector<Vec> conditions(nm, Vec(nd, 0));
    for (uint32_t k = 0; k < nm; ++k) {
        for (uint32_t i = 0; i < f.source()->n(); ++i)
            conditions[k][amb.left_index[i]] = f.matrix()[i][k];
        for (uint32_t j = 0; j < g.source()->n(); ++j)
            conditions[k][amb.right_index[j]] = field.neg(g.matrix()[j][k]);
    }
    Subspace fiber = null_space(field, nd, conditions);
    if (!is_bracket_closed(*amb.algebra, fiber))
        throw Error("pullback: fiber product is not bracket-closed");
    if (!is_parity_split(*amb.algebra, fiber))
        throw Error("pullback: fiber product is not graded");

    const auto fiber_pivots = fiber.pivot_columns();
    uint32_t p0 = 0;
    for (uint32_t r = 0; r < fiber.dim(); ++r)
        if (amb.algebra->parity(fiber_pivots[r]) == 0) ++p0;
    const uint32_t pn = fiber.dim();

    BracketTable table = BracketTable::zero(amb.algebra->p(), p0, pn - p0);
    for (uint32_t a = 0; a < pn; ++a) {
        for (uint32_t b = 0; b < pn; ++b) {
            Vec w = amb.algebra->bracket(fiber.basis()[a], fiber.basis()[b]);
            auto coords = fiber.coordinates_of(w);
            if (!coords) throw Error("pullback: bracket left the fiber product");
            for (uint32_t k = 0; k < pn; ++k) table.at(a, b, k) = (*coords)[k];
        }
    }
    AlgebraPtr P = make_algebra(table);

    std::vector<Vec> rows_left, rows_right;
    for (const Vec& row : fiber.basis()) {
        auto [l, r] = amb.split(row);
        rows_left.push_back(std::move(l));
        rows_right.push_back(std::move(r));
    }
    return Pullback{P, Morphism(P, f.source(), std::move(rows_left)),
                    Morphism(P, g.source(), std::move(rows_right)),
                    Morphism(P, amb.algebra, fiber.basis()), amb};
}

Transported transport_basis(AlgebraPtr L, const std::vector<Vec>& new_basis) {
    const uint32_t n = L->n();
    if (new_basis.size() != n) throw Error("transport_basis: need one row per basis vector");
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t k = 0; k < n; ++k)
            if (new_basis[i][k] != 0 && L->parity(k) != L->parity(i))
                throw Error("transport_basis: basis rows must be parity-pure in position order");
    auto inv = matrix_inverse(L->field(), new_basis);
    if (!inv) throw Error("transport_basis: basis matrix is singular");

    const Fp& f = L->field();
    auto to_new = [&](const Vec& w) {
        Vec t(n, 0);
        for (uint32_t k = 0; k < n; ++k)
            for (uint32_t m = 0; m < n; ++m)
                t[k] = f.add(t[k], f.mul(w[m], (*inv)[m][k]));
        return t;
    };

    BracketTable table = BracketTable::zero(L->p(), L->dim_even(), L->dim_odd());
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = 0; j < n; ++j) {
            Vec w = to_new(L->bracket(new_basis[i], new_basis[j]));
            for (uint32_t k = 0; k < n; ++k) table.at(i, j, k) = w[k];
        }
    }
    AlgebraPtr T = make_algebra(table);
    return Transported{T, Morphism(T, L, new_basis)};
}

}  // namespace solvgraph
