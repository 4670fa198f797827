#include "solvgraph/catalog.hpp"

namespace solvgraph {

namespace {

using CoeffList = std::vector<std::pair<uint32_t, int64_t>>;

AlgebraPtr make_e1(uint32_t p) {
    // span{h} even, span{x} odd, [h,x] = x
    BracketTable t = BracketTable::zero(p, 1, 1);
    t.basis_names = {"h", "x"};
    t.set_bracket(0, 1, CoeffList{{1, 1}});
    return make_algebra(t);
}

AlgebraPtr make_e2(uint32_t p) {
    // span{h} even, span{x,y} odd; h has weights +1/-1, the odd pair brackets
    // back onto h
    BracketTable t = BracketTable::zero(p, 1, 2);
    t.basis_names = {"h", "x", "y"};
    t.set_bracket(0, 1, CoeffList{{1, 1}});
    t.set_bracket(0, 2, CoeffList{{2, -1}});
    t.set_bracket(1, 2, CoeffList{{0, 1}});
    return make_algebra(t);
}

AlgebraPtr make_sl2(uint32_t p) {
    // purely even: [e,f] = h, [h,e] = 2e, [h,f] = -2f
    BracketTable t = BracketTable::zero(p, 3, 0);
    t.basis_names = {"e", "f", "h"};
    t.set_bracket(0, 1, CoeffList{{2, 1}});
    t.set_bracket(0, 2, CoeffList{{0, -2}});
    t.set_bracket(1, 2, CoeffList{{1, 2}});
    return make_algebra(t);
}

AlgebraPtr make_heisenberg(uint32_t p) {
    // odd pair bracketing onto a central even element; nilpotent
    BracketTable t = BracketTable::zero(p, 1, 2);
    t.basis_names = {"z", "u", "v"};
    t.set_bracket(1, 2, CoeffList{{0, 1}});
    return make_algebra(t);
}

AlgebraPtr make_abelian(uint32_t p, uint32_t d0, uint32_t d1,
                        std::vector<std::string> names = {}) {
    BracketTable t = BracketTable::zero(p, d0, d1);
    t.basis_names = std::move(names);
    return make_algebra(t);
}

struct CatalogData {
    std::vector<CatalogAlgebra> algebras;
    std::vector<CatalogMorphism> morphisms;
};

CatalogData build_catalog() {
    CatalogData data;

    AlgebraPtr e1_3 = make_e1(3);
    AlgebraPtr e1_5 = make_e1(5);
    AlgebraPtr e2_3 = make_e2(3);
    AlgebraPtr e2_5 = make_e2(5);
    AlgebraPtr sl2_3 = make_sl2(3);
    AlgebraPtr heis_3 = make_heisenberg(3);
    AlgebraPtr heis_5 = make_heisenberg(5);
    AlgebraPtr ab10_3 = make_abelian(3, 1, 0, {"c"});
    AlgebraPtr ab10_5 = make_abelian(5, 1, 0, {"c"});
    AlgebraPtr zero_3 = make_abelian(3, 0, 0);

    DirectSum gl = direct_sum(sl2_3, ab10_3);

    data.algebras = {
        {"E1@3", "(1|1), [h,x]=x; solvable, not nilpotent", e1_3},
        {"E1@5", "(1|1) over GF(5)", e1_5},
        {"E2@3", "(1|2), odd weight pair over h; non-solvable", e2_3},
        {"E2@5", "(1|2) over GF(5)", e2_5},
        {"sl2@3", "split simple rank 1, purely even", sl2_3},
        {"gl2split@3", "sl2 plus a central line c", gl.algebra},
        {"heis@3", "(1|2) odd Heisenberg; nilpotent", heis_3},
        {"heis@5", "(1|2) odd Heisenberg over GF(5)", heis_5},
        {"ab10@3", "one even dimension, abelian", ab10_3},
        {"ab10@5", "one even dimension, abelian over GF(5)", ab10_5},
        {"zero@3", "zero-dimensional algebra", zero_3},
    };

    // graded automorphism of E2@3: h -> 2h, x -> y, y -> 2x
    Morphism swap(e2_3, e2_3,
                  std::vector<Vec>{{2, 0, 0}, {0, 0, 1}, {0, 2, 0}});

    data.morphisms = {
        {"E2@3.swap", "graded automorphism h->2h, x->y, y->2x", swap},
        {"gl2split@3.proj", "projection gl2split -> sl2, kernel span{c}", gl.project_left},
        {"gl2split@3.embed", "central line ab10 -> gl2split", gl.inject_right},
    };
    return data;
}

const CatalogData& catalog() {
    static const CatalogData data = build_catalog();
    return data;
}

}  // namespace

const std::vector<CatalogAlgebra>& catalog_algebras() { return catalog().algebras; }
const std::vector<CatalogMorphism>& catalog_morphisms() { return catalog().morphisms; }

AlgebraPtr catalog_algebra(const std::string& name) {
    for (const auto& entry : catalog_algebras())
        if (entry.name == name) return entry.algebra;
    throw Error("catalog: unknown algebra '" + name + "'");
}

const Morphism& catalog_morphism(const std::string& name) {
    for (const auto& entry : catalog_morphisms())
        if (entry.name == name) return entry.morphism;
    throw Error("catalog: unknown morphism '" + name + "'");
}

bool catalog_has_algebra(const std::string& name) {
    for (const auto& entry : catalog_algebras())
        if (entry.name == name) return true;
    return false;
}

bool catalog_has_morphism(const std::string& name) {
    for (const auto& entry : catalog_morphisms())
        if (entry.name == name) return true;
    return false;
}

}  // namespace solvgraph
