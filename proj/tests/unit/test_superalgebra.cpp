#include <doctest.h>

#include <solvgraph/catalog.hpp>
#include <solvgraph/verify.hpp>

using namespace solvgraph;

namespace {

BracketTable e2_table() {
    BracketTable t = BracketTable::zero(3, 1, 2);
    t.basis_names = {"h", "x", "y"};
    using CL = std::vector<std::pair<uint32_t, int64_t>>;
    t.set_bracket(0, 1, CL{{1, 1}});
    t.set_bracket(0, 2, CL{{2, -1}});
    t.set_bracket(1, 2, CL{{0, 1}});
    return t;
}

bool zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t c) { return c == 0; });
}

// J(a,b,c) = [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|}[b,[a,c]] for homogeneous
// arguments, evaluated through the public bracket only.
Vec jacobi_defect(const SuperAlgebra& L, const Vec& a, uint8_t pa, const Vec& b, uint8_t pb,
                  const Vec& c) {
    (void)pa;
    Vec lhs = L.bracket(a, L.bracket(b, c));
    Vec r1 = L.bracket(L.bracket(a, b), c);
    Vec r2 = L.bracket(b, L.bracket(a, c));
    const Fp& f = L.field();
    Vec d(L.n(), 0);
    for (uint32_t t = 0; t < L.n(); ++t) {
        uint8_t rhs = (pa && pb) ? f.sub(r1[t], r2[t]) : f.add(r1[t], r2[t]);
        d[t] = f.sub(lhs[t], rhs);
    }
    return d;
}

std::vector<Vec> homogeneous_elements(const SuperAlgebra& L, uint8_t parity) {
    std::vector<Vec> out;
    for (const Vec& v : all_vectors(L.field(), L.n())) {
        bool ok = true;
        for (uint32_t i = 0; i < L.n(); ++i)
            if (v[i] != 0 && L.parity(i) != parity) ok = false;
        if (ok) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("validation accepts the (1|2) weight-pair table and flags the strict axioms") {
    ValidationResult r = validate(e2_table());
    REQUIRE(r.algebra != nullptr);
    CHECK_FALSE(r.algebra->strict_super());
    // six repeated-argument Jacobi instances and four cube-rule vectors
    size_t jacobi = 0, cube = 0;
    for (const auto& w : r.report.warnings) {
        if (w.kind == AxiomIssue::Kind::JacobiRepeated) ++jacobi;
        if (w.kind == AxiomIssue::Kind::CharThreeCube) ++cube;
    }
    CHECK(jacobi == 6);
    CHECK(cube == 4);

    ValidationResult strict = validate(e2_table(), AxiomLevel::Strict);
    CHECK(strict.algebra == nullptr);
    CHECK_FALSE(strict.report.ok());
}

TEST_CASE("validation rejects broken tables") {
    SUBCASE("nonzero [e,e] for an even e violates skew-symmetry") {
        BracketTable t = BracketTable::zero(3, 1, 0);
        t.at(0, 0, 0) = 1;
        ValidationResult r = validate(t);
        REQUIRE(r.algebra == nullptr);
        CHECK(r.report.errors[0].kind == AxiomIssue::Kind::SkewSymmetry);
    }
    SUBCASE("odd bracket landing odd violates the grading") {
        BracketTable t = e2_table();
        using CL = std::vector<std::pair<uint32_t, int64_t>>;
        t.set_bracket(1, 2, CL{{0, 0}, {1, 1}});  // [x,y] = x
        ValidationResult r = validate(t);
        REQUIRE(r.algebra == nullptr);
        CHECK(r.report.errors[0].kind == AxiomIssue::Kind::Grading);
    }
    SUBCASE("even p rejected") {
        BracketTable t = BracketTable::zero(2, 1, 0);
        ValidationResult r = validate(t);
        REQUIRE(r.algebra == nullptr);
        CHECK(r.report.errors[0].kind == AxiomIssue::Kind::FieldNotOddPrime);
    }
    SUBCASE("non-prime p rejected") {
        BracketTable t = BracketTable::zero(9, 1, 0);
        CHECK(validate(t).algebra == nullptr);
    }
}

TEST_CASE("cube rule enumeration is capped at dim_odd = 8") {
    BracketTable big = BracketTable::zero(3, 0, 9);  // abelian, cube holds but is unverifiable
    ValidationResult standard = validate(big);
    REQUIRE(standard.algebra != nullptr);
    bool unchecked = false;
    for (const auto& w : standard.report.warnings)
        if (w.kind == AxiomIssue::Kind::CubeUnchecked) unchecked = true;
    CHECK(unchecked);
    CHECK(validate(big, AxiomLevel::Strict).algebra == nullptr);

    BracketTable small = BracketTable::zero(3, 0, 8);
    CHECK(validate(small, AxiomLevel::Strict).algebra != nullptr);
}

TEST_CASE("catalog algebras: strictness as analyzed") {
    CHECK(catalog_algebra("E1@3")->strict_super());
    CHECK(catalog_algebra("sl2@3")->strict_super());
    CHECK(catalog_algebra("gl2split@3")->strict_super());
    CHECK(catalog_algebra("heis@3")->strict_super());
    CHECK_FALSE(catalog_algebra("E2@3")->strict_super());
    CHECK_FALSE(catalog_algebra("E2@5")->strict_super());
}

TEST_CASE("bracket evaluation") {
    AlgebraPtr L = catalog_algebra("E2@3");
    const Vec h{1, 0, 0}, x{0, 1, 0}, y{0, 0, 1}, z{0, 0, 0};
    CHECK(L->bracket(h, x) == x);
    CHECK(L->bracket(x, y) == h);
    CHECK(L->bracket(y, x) == h);          // odd pair brackets symmetrically
    CHECK(L->bracket(x, h) == Vec{0, 2, 0});
    CHECK(zero(L->bracket(x, z)));
    CHECK(L->bracket(Vec{1, 1, 1}, Vec{1, 1, 1}) == Vec{2, 0, 0});
    CHECK_THROWS_AS(L->bracket(Vec{1, 0}, x), Error);
}

TEST_CASE("super axioms hold on arbitrary homogeneous elements of strict algebras") {
    for (const char* name : {"E1@3", "sl2@3", "heis@3"}) {
        AlgebraPtr L = catalog_algebra(name);
        const Fp& f = L->field();
        std::vector<std::pair<Vec, uint8_t>> homog;
        for (uint8_t par : {0, 1})
            for (const Vec& v : homogeneous_elements(*L, par)) homog.emplace_back(v, par);
        for (const auto& [a, pa] : homog) {
            for (const auto& [b, pb] : homog) {
                // skew: [a,b] = -(-1)^{|a||b|}[b,a]
                Vec ab = L->bracket(a, b), ba = L->bracket(b, a);
                for (uint32_t t = 0; t < L->n(); ++t) {
                    uint8_t expect = (pa && pb) ? ba[t] : f.neg(ba[t]);
                    CHECK(ab[t] == expect);
                }
                for (const auto& [c, pc] : homog) {
                    (void)pc;
                    CHECK(zero(jacobi_defect(*L, a, pa, b, pb, c)));
                }
            }
        }
    }
}

TEST_CASE("the weight-pair algebra fails the repeated-argument Jacobi instance") {
    AlgebraPtr L = catalog_algebra("E2@3");
    const Vec x{0, 1, 0}, y{0, 0, 1};
    CHECK_FALSE(zero(jacobi_defect(*L, x, 1, x, 1, y)));
}

TEST_CASE("generated subalgebras") {
    AlgebraPtr L = catalog_algebra("E2@3");
    const Vec h{1, 0, 0}, x{0, 1, 0}, y{0, 0, 1};
    SUBCASE("span{h,x} already closed") {
        std::vector<Vec> gens{h, x};
        Subalg s = generated_subalgebra(*L, gens);
        CHECK(s.space.dim() == 2);
        CHECK(s.graded);
    }
    SUBCASE("x and y generate everything") {
        std::vector<Vec> gens{x, y};
        CHECK(generated_subalgebra(*L, gens).space.dim() == 3);
    }
    SUBCASE("no generators give the zero subalgebra") {
        CHECK(generated_subalgebra(*L, {}).space.is_zero());
    }
    SUBCASE("monotone and idempotent") {
        std::vector<Vec> small{h}, big{h, x};
        Subalg a = generated_subalgebra(*L, small);
        Subalg b = generated_subalgebra(*L, big);
        CHECK(b.space.contains(a.space));
        Subalg again = generated_subalgebra(*L, b.space.basis());
        CHECK(again.space == b.space);
    }
    SUBCASE("depends only on the span of the generators") {
        const Fp& f = L->field();
        for (uint8_t a = 1; a < 3; ++a) {
            for (uint8_t b = 1; b < 3; ++b) {
                Vec ax(3), by(3);
                for (int t = 0; t < 3; ++t) {
                    ax[t] = f.mul(a, Vec{1, 1, 0}[t]);
                    by[t] = f.mul(b, Vec{0, 1, 1}[t]);
                }
                std::vector<Vec> scaled{ax, by}, plain{{1, 1, 0}, {0, 1, 1}};
                CHECK(generated_subalgebra(*L, scaled).space ==
                      generated_subalgebra(*L, plain).space);
            }
        }
    }
    SUBCASE("graded closure can be strictly larger") {
        const Vec mixed{1, 1, 0};  // h + x, a single inhomogeneous generator
        std::vector<Vec> gens{mixed};
        Subalg plain = generated_subalgebra(*L, gens, ClosureMode::Plain);
        Subalg graded = generated_subalgebra(*L, gens, ClosureMode::Graded);
        CHECK(plain.space.dim() == 1);
        CHECK_FALSE(plain.graded);
        CHECK(graded.space.dim() == 2);
        CHECK(graded.graded);
    }
}

TEST_CASE("series and solvability") {
    AlgebraPtr e1 = catalog_algebra("E1@3");
    AlgebraPtr e2 = catalog_algebra("E2@3");
    Subspace full1 = full_space(*e1), full2 = full_space(*e2);

    auto dims = [](const std::vector<Subspace>& series) {
        std::vector<uint32_t> out;
        for (const auto& s : series) out.push_back(s.dim());
        return out;
    };

    CHECK(dims(derived_series(*e1, full1)) == std::vector<uint32_t>{2, 1, 0});
    CHECK(dims(derived_series(*e2, full2)) == std::vector<uint32_t>{3, 3});
    CHECK(dims(lower_central_series(*e1, full1)) == std::vector<uint32_t>{2, 1, 1});

    CHECK(is_solvable(*e1, full1));
    CHECK_FALSE(is_nilpotent(*e1, full1));
    CHECK_FALSE(is_solvable(*e2, full2));
    CHECK(is_solvable(*e1, zero_space(*e1)));
    CHECK(is_nilpotent(*e1, zero_space(*e1)));

    AlgebraPtr heis = catalog_algebra("heis@3");
    CHECK(is_nilpotent(*heis, full_space(*heis)));
    CHECK(is_solvable(*heis, full_space(*heis)));

    AlgebraPtr abelian = catalog_algebra("ab10@3");
    CHECK(dims(derived_series(*abelian, full_space(*abelian))) == std::vector<uint32_t>{1, 0});
    CHECK(dims(lower_central_series(*abelian, full_space(*abelian))) ==
          std::vector<uint32_t>{1, 0});

    // within E1, span{h} is abelian and span{h,x} is solvable but not nilpotent
    Subspace line_h = Subspace::span(e1->field(), 2, std::vector<Vec>{{1, 0}});
    CHECK(dims(lower_central_series(*e1, line_h)) == std::vector<uint32_t>{1, 0});
    CHECK_FALSE(is_nilpotent(*e1, full1));

    CHECK_THROWS_AS(
        derived_series(*e2, Subspace::span(e2->field(), 3, std::vector<Vec>{{0, 1, 0}, {0, 0, 1}})),
        Error);  // span{x,y} is not bracket-closed
}

TEST_CASE("derived terms of a graded start are graded ideals of the previous term") {
    for (const char* name : {"E1@3", "E2@3", "sl2@3", "gl2split@3", "heis@3", "E1@5"}) {
        AlgebraPtr L = catalog_algebra(name);
        auto series = derived_series(*L, full_space(*L));
        for (size_t k = 0; k + 1 < series.size(); ++k) {
            const Subspace& prev = series[k];
            const Subspace& next = series[k + 1];
            CHECK(is_parity_split(*L, next));
            for (const Vec& a : next.basis())
                for (const Vec& b : prev.basis()) {
                    CHECK(next.contains(L->bracket(a, b)));
                    CHECK(next.contains(L->bracket(b, a)));
                }
        }
    }
}

TEST_CASE("graded ideal predicate") {
    AlgebraPtr e1 = catalog_algebra("E1@3");
    AlgebraPtr e2 = catalog_algebra("E2@3");
    CHECK(is_graded_ideal(*e1, Subspace::span(e1->field(), 2, std::vector<Vec>{{0, 1}})));
    CHECK_FALSE(is_graded_ideal(*e2, Subspace::span(e2->field(), 3, std::vector<Vec>{{1, 0, 0}})));
    CHECK(is_graded_ideal(*e2, zero_space(*e2)));
    CHECK(is_graded_ideal(*e2, full_space(*e2)));
    // parity-mixed line: an ideal test must also fail the grading
    Subspace mixed = Subspace::span(e1->field(), 2, std::vector<Vec>{{1, 1}});
    CHECK_FALSE(is_graded_ideal(*e1, mixed));
}

TEST_CASE("direct sums") {
    AlgebraPtr e2 = catalog_algebra("E2@3");
    AlgebraPtr e1 = catalog_algebra("E1@3");
    DirectSum ds = direct_sum(e2, e1);
    CHECK(ds.algebra->dim_even() == 2);
    CHECK(ds.algebra->dim_odd() == 3);

    // cross brackets vanish
    Vec left_x = ds.embed(Vec{0, 1, 0}, Vec{0, 0});
    Vec right_x = ds.embed(Vec{0, 0, 0}, Vec{0, 1});
    CHECK(zero(ds.algebra->bracket(left_x, right_x)));

    // projections and injections compose to the identity on each summand
    CHECK(compose(ds.project_left, ds.inject_left).matrix() ==
          Morphism::identity(e2).matrix());
    CHECK(compose(ds.project_right, ds.inject_right).matrix() ==
          Morphism::identity(e1).matrix());

    // derived series of the sum is the componentwise sum, term by term
    auto s_sum = derived_series(*ds.algebra, full_space(*ds.algebra));
    auto s_left = derived_series(*e2, full_space(*e2));
    auto s_right = derived_series(*e1, full_space(*e1));
    for (size_t k = 0; k < s_sum.size(); ++k) {
        const Subspace& left = k < s_left.size() ? s_left[k] : s_left.back();
        const Subspace& right = k < s_right.size() ? s_right[k] : s_right.back();
        std::vector<Vec> rows;
        for (const Vec& r : left.basis()) rows.push_back(ds.embed(r, Vec(e1->n(), 0)));
        for (const Vec& r : right.basis()) rows.push_back(ds.embed(Vec(e2->n(), 0), r));
        CHECK(s_sum[k] == Subspace::span(ds.algebra->field(), ds.algebra->n(), rows));
    }

    CHECK_THROWS_AS(direct_sum(e2, catalog_algebra("E1@5")), Error);
}

TEST_CASE("quotients") {
    AlgebraPtr e1 = catalog_algebra("E1@3");
    AlgebraPtr e2 = catalog_algebra("E2@3");

    SUBCASE("E1 by its odd line is one-dimensional abelian") {
        Subspace j = Subspace::span(e1->field(), 2, std::vector<Vec>{{0, 1}});
        Quotient q = quotient(e1, j);
        CHECK(q.algebra->dim_even() == 1);
        CHECK(q.algebra->dim_odd() == 0);
        CHECK(is_solvable(*q.algebra, full_space(*q.algebra)));
        CHECK(q.projection.surjective());
        CHECK(q.projection.kernel() == j);
    }
    SUBCASE("quotient by zero is an isomorphic copy") {
        Quotient q = quotient(e2, zero_space(*e2));
        CHECK(q.algebra->n() == 3);
        CHECK(q.projection.kernel().is_zero());
        CHECK(q.projection.matrix() == Morphism::identity(e2).matrix());
    }
    SUBCASE("span{h} is not an ideal of the weight-pair algebra") {
        Subspace j = Subspace::span(e2->field(), 3, std::vector<Vec>{{1, 0, 0}});
        CHECK_THROWS_WITH_AS(quotient(e2, j), doctest::Contains("not an ideal"), Error);
    }
    SUBCASE("parity-mixed subspaces are rejected as not graded") {
        Subspace j = Subspace::span(e1->field(), 2, std::vector<Vec>{{1, 1}});
        CHECK_THROWS_WITH_AS(quotient(e1, j), doctest::Contains("not graded"), Error);
    }
}

TEST_CASE("morphism validation and kernels") {
    AlgebraPtr e2 = catalog_algebra("E2@3");
    SUBCASE("the swap automorphism is accepted") {
        const Morphism& swap = catalog_morphism("E2@3.swap");
        CHECK(swap.surjective());
        CHECK(swap.injective());
        CHECK(swap.apply(Vec{1, 0, 0}) == Vec{2, 0, 0});
    }
    SUBCASE("grading violations are rejected") {
        // h -> x is even-to-odd
        CHECK_THROWS_WITH_AS(
            Morphism(e2, e2, std::vector<Vec>{{0, 1, 0}, {0, 0, 1}, {0, 2, 0}}),
            doctest::Contains("grading"), Error);
    }
    SUBCASE("bracket violations are rejected") {
        // x -> 2x alone breaks [x,y] = h
        CHECK_THROWS_WITH_AS(
            Morphism(e2, e2, std::vector<Vec>{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}),
            doctest::Contains("bracket"), Error);
    }
    SUBCASE("projection kernel") {
        const Morphism& proj = catalog_morphism("gl2split@3.proj");
        CHECK(proj.surjective());
        CHECK(proj.kernel().dim() == 1);
        CHECK(proj.kernel().contains(Vec{0, 0, 0, 1}));
    }
}

TEST_CASE("pullbacks") {
    AlgebraPtr sl2 = catalog_algebra("sl2@3");
    const Morphism& proj = catalog_morphism("gl2split@3.proj");

    SUBCASE("identity against identity gives the diagonal") {
        Morphism id = Morphism::identity(sl2);
        Pullback pb = pullback(id, id);
        CHECK(pb.algebra->n() == sl2->n());
        CHECK(pb.project_left.surjective());
        CHECK(pb.project_right.surjective());
    }
    SUBCASE("projection against identity recovers the source") {
        Pullback pb = pullback(proj, Morphism::identity(sl2));
        CHECK(pb.algebra->n() == 4);
        CHECK(pb.project_left.surjective());
        CHECK(pb.project_left.injective());  // P -> gl2split is an isomorphism
    }
    SUBCASE("non-surjective inputs are rejected") {
        const Morphism& embed = catalog_morphism("gl2split@3.embed");
        CHECK_THROWS_AS(pullback(embed, embed), Error);
    }
    SUBCASE("mismatched targets are rejected") {
        Morphism id_e2 = Morphism::identity(catalog_algebra("E2@3"));
        CHECK_THROWS_AS(pullback(proj, id_e2), Error);
    }
}

TEST_CASE("basis transport") {
    AlgebraPtr e2 = catalog_algebra("E2@3");
    SUBCASE("a graded change of basis produces an isomorphic table") {
        std::vector<Vec> rows{{2, 0, 0}, {0, 1, 1}, {0, 1, 2}};
        Transported t = transport_basis(e2, rows);
        CHECK(t.algebra->n() == 3);
        CHECK(t.iso.surjective());
        CHECK(t.iso.injective());
    }
    SUBCASE("singular matrices are rejected") {
        CHECK_THROWS_AS(transport_basis(e2, {{1, 0, 0}, {0, 1, 1}, {0, 2, 2}}), Error);
    }
    SUBCASE("parity-mixing rows are rejected") {
        CHECK_THROWS_AS(transport_basis(e2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), Error);
    }
}
