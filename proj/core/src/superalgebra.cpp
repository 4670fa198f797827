#include "solvgraph/superalgebra.hpp"

#include <algorithm>
#include <sstream>

namespace solvgraph {

BracketTable BracketTable::zero(uint32_t p, uint32_t dim_even, uint32_t dim_odd) {
    BracketTable t;
    t.p = p;
    t.dim_even = dim_even;
    t.dim_odd = dim_odd;
    const size_t n = t.n();
    t.c.assign(n * n * n, 0);
    return t;
}

void BracketTable::set_bracket(uint32_t i, uint32_t j,
                               std::span<const std::pair<uint32_t, int64_t>> coeffs) {
    if (i > j) throw Error("set_bracket: expects i <= j");
    const Fp f(p);
    const uint8_t pi = i < dim_even ? 0 : 1;
    const uint8_t pj = j < dim_even ? 0 : 1;
    for (auto [k, value] : coeffs) {
        uint8_t v = f.reduce(value);
        at(i, j, k) = v;
        if (i != j) {
            // [e_j, e_i] = -(-1)^{|i||j|} [e_i, e_j]
            at(j, i, k) = (pi && pj) ? v : f.neg(v);
        }
    }
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    os << errors.size() << " error(s), " << warnings.size() << " warning(s)";
    for (const auto& e : errors) os << "\n  error: " << e.message;
    for (const auto& w : warnings) os << "\n  warning: " << w.message;
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("algebra validation failed: " + report.summary()), report_(std::move(report)) {}

SuperAlgebra::SuperAlgebra(BracketTable table, ValidationReport report, bool strict)
    : field_(table.p), table_(std::move(table)), validation_(std::move(report)), strict_super_(strict) {}

std::string SuperAlgebra::basis_name(uint32_t i) const {
    if (i < table_.basis_names.size()) return table_.basis_names[i];
    return (parity(i) ? "o" : "e") + std::to_string(i);
}

Vec SuperAlgebra::bracket(const Vec& x, const Vec& y) const {
    const uint32_t nn = n();
    if (x.size() != nn || y.size() != nn) throw Error("bracket: element dimension mismatch");
    Vec out(nn, 0);
    for (uint32_t i = 0; i < nn; ++i) {
        if (x[i] == 0) continue;
        for (uint32_t j = 0; j < nn; ++j) {
            if (y[j] == 0) continue;
            const uint8_t factor = field_.mul(x[i], y[j]);
            const uint8_t* cij = &table_.c[(i * nn + j) * nn];
            for (uint32_t k = 0; k < nn; ++k) {
                if (cij[k]) out[k] = field_.add(out[k], field_.mul(factor, cij[k]));
            }
        }
    }
    return out;
}

std::string SuperAlgebra::label(const Vec& v) const {
    std::string s;
    for (uint32_t i = 0; i < n(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (v[i] != 1) s += std::to_string(static_cast<int>(v[i]));
        s += basis_name(i);
    }
    return s.empty() ? "0" : s;
}

namespace {

std::string idx3(uint32_t i, uint32_t j, uint32_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// J(a,b,c) = [a,[b,c]] - [[a,b],c] - (-1)^{|a||b|} [b,[a,c]] on basis vectors,
// computed directly from the table.
Vec jacobi_defect(const SuperAlgebra& L, uint32_t i, uint32_t j, uint32_t k) {
    const uint32_t n = L.n();
    Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
    Vec lhs = L.bracket(ei, L.bracket(ej, ek));
    Vec r1 = L.bracket(L.bracket(ei, ej), ek);
    Vec r2 = L.bracket(ej, L.bracket(ei, ek));
    const bool sign_flip = L.parity(i) && L.parity(j);
    Vec d(n, 0);
    const Fp& f = L.field();
    for (uint32_t t = 0; t < n; ++t) {
        uint8_t rhs = sign_flip ? f.sub(r1[t], r2[t]) : f.add(r1[t], r2[t]);
        d[t] = f.sub(lhs[t], rhs);
    }
    return d;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](uint8_t x) { return x == 0; });
}

}  // namespace

ValidationResult validate(const BracketTable& table, AxiomLevel level) {
    ValidationReport report;
    auto err = [&report](AxiomIssue issue) { report.errors.push_back(std::move(issue)); };

    if (!Fp::is_odd_prime(table.p)) {
        err({AxiomIssue::Kind::FieldNotOddPrime, {-1, -1, -1}, {},
             "p = " + std::to_string(table.p) + " is not an odd prime"});
        return {nullptr, std::move(report)};
    }
    const uint32_t n = table.n();
    if (table.c.size() != static_cast<size_t>(n) * n * n) {
        err({AxiomIssue::Kind::BadShape, {-1, -1, -1}, {},
             "structure constant table has wrong size"});
        return {nullptr, std::move(report)};
    }
    if (!table.basis_names.empty() && table.basis_names.size() != n) {
        err({AxiomIssue::Kind::BadShape, {-1, -1, -1}, {},
             "basis_names must be empty or have one entry per basis vector"});
        return {nullptr, std::move(report)};
    }
    const Fp f(table.p);
    for (uint8_t v : table.c) {
        if (v >= table.p) {
            err({AxiomIssue::Kind::BadShape, {-1, -1, -1}, {},
                 "structure constant not reduced mod p"});
            return {nullptr, std::move(report)};
        }
    }

    auto parity = [&](uint32_t i) -> uint8_t { return i < table.dim_even ? 0 : 1; };

    // Grading: [L_a, L_b] lands in L_{a+b}.
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (uint32_t k = 0; k < n; ++k)
                if (table.at(i, j, k) != 0 && parity(k) != (parity(i) ^ parity(j)))
                    err({AxiomIssue::Kind::Grading,
                         {static_cast<int32_t>(i), static_cast<int32_t>(j), static_cast<int32_t>(k)},
                         {},
                         "grading violated at c" + idx3(i, j, k)});

    // Super skew-symmetry on basis pairs (forces [e,e] = 0 for even e).
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i; j < n; ++j)
            for (uint32_t k = 0; k < n; ++k) {
                uint8_t expect = (parity(i) && parity(j)) ? table.at(i, j, k)
                                                          : f.neg(table.at(i, j, k));
                if (table.at(j, i, k) != expect)
                    err({AxiomIssue::Kind::SkewSymmetry,
                         {static_cast<int32_t>(i), static_cast<int32_t>(j), static_cast<int32_t>(k)},
                         {},
                         "super skew-symmetry violated between c" + idx3(i, j, k) + " and c" +
                             idx3(j, i, k)});
            }

    if (!report.errors.empty()) return {nullptr, std::move(report)};

    // Jacobi needs a bracket evaluator; build a provisional algebra.
    SuperAlgebra probe(table, {}, false);

    std::vector<AxiomIssue> strict_issues;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j)
            for (uint32_t k = 0; k < n; ++k) {
                Vec d = jacobi_defect(probe, i, j, k);
                if (is_zero(d)) continue;
                const bool repeated = i == j || j == k || i == k;
                AxiomIssue issue{repeated ? AxiomIssue::Kind::JacobiRepeated
                                          : AxiomIssue::Kind::Jacobi,
                                 {static_cast<int32_t>(i), static_cast<int32_t>(j),
                                  static_cast<int32_t>(k)},
                                 d,
                                 std::string(repeated ? "repeated-argument " : "") +
                                     "super Jacobi identity violated at " + idx3(i, j, k)};
                if (repeated)
                    strict_issues.push_back(std::move(issue));
                else
                    err(std::move(issue));
            }

    // char 3: [x,[x,x]] = 0 for every odd x. Cubic, so basis checks do not
    // suffice; enumerate all odd vectors up to dim_odd = 8.
    if (table.p == 3 && table.dim_odd > 0) {
        if (table.dim_odd > 8) {
            strict_issues.push_back({AxiomIssue::Kind::CubeUnchecked, {-1, -1, -1}, {},
                                     "dim_odd > 8: cube rule [x,[x,x]] = 0 left unverified"});
        } else {
            Vec x(n, 0);
            bool done = false;
            while (!done) {
                Vec cube = probe.bracket(x, probe.bracket(x, x));
                if (!is_zero(cube)) {
                    strict_issues.push_back({AxiomIssue::Kind::CharThreeCube, {-1, -1, -1}, x,
                                             "cube rule violated: [x,[x,x]] = " + vec_to_string(cube) +
                                                 " for odd x = " + vec_to_string(x)});
                }
                int pos = static_cast<int>(n) - 1;
                while (pos >= static_cast<int>(table.dim_even) && ++x[pos] == table.p) x[pos--] = 0;
                done = pos < static_cast<int>(table.dim_even);
            }
        }
    }

    const bool strict_clean = strict_issues.empty();
    for (auto& issue : strict_issues) {
        if (level == AxiomLevel::Strict)
            report.errors.push_back(std::move(issue));
        else
            report.warnings.push_back(std::move(issue));
    }
    if (!report.errors.empty()) return {nullptr, std::move(report)};

    AlgebraPtr algebra(new SuperAlgebra(table, report, strict_clean));
    return {algebra, std::move(report)};
}

AlgebraPtr make_algebra(const BracketTable& table, AxiomLevel level) {
    ValidationResult r = validate(table, level);
    if (!r.algebra) throw ValidationError(std::move(r.report));
    return r.algebra;
}

// ---------------------------------------------------------------------------

Subspace full_space(const SuperAlgebra& L) {
    std::vector<Vec> rows;
    for (uint32_t i = 0; i < L.n(); ++i) rows.push_back(unit_vec(L.n(), i));
    return Subspace::span(L.field(), L.n(), rows);
}

Subspace zero_space(const SuperAlgebra& L) {
    return Subspace::span(L.field(), L.n(), {});
}

Vec parity_component(const SuperAlgebra& L, const Vec& v, uint8_t parity) {
    Vec out(L.n(), 0);
    for (uint32_t i = 0; i < L.n(); ++i)
        if (L.parity(i) == parity) out[i] = v[i];
    return out;
}

Subspace bracket_closure(const SuperAlgebra& L, const Subspace& start, ClosureMode mode) {
    if (start.ambient_dim() != L.n() || start.p() != L.p())
        throw Error("bracket_closure: subspace does not live in the algebra");
    Subspace cur = start;
    while (true) {
        std::vector<Vec> rows = cur.basis();
        const auto& basis = cur.basis();
        for (const Vec& a : basis)
            for (const Vec& b : basis) rows.push_back(L.bracket(a, b));
        if (mode == ClosureMode::Graded) {
            for (const Vec& a : basis) {
                rows.push_back(parity_component(L, a, 0));
                rows.push_back(parity_component(L, a, 1));
            }
        }
        Subspace next = Subspace::span(L.field(), L.n(), rows);
        if (next.dim() == cur.dim()) return next;
        cur = std::move(next);
    }
}

Subalg generated_subalgebra(const SuperAlgebra& L, std::span<const Vec> generators,
                            ClosureMode mode) {
    Subspace seed = Subspace::span(L.field(), L.n(), generators);
    Subspace space = bracket_closure(L, seed, mode);
    return Subalg{space, is_parity_split(L, space)};
}

bool is_bracket_closed(const SuperAlgebra& L, const Subspace& s) {
    const auto& basis = s.basis();
    for (const Vec& a : basis)
        for (const Vec& b : basis)
            if (!s.contains(L.bracket(a, b))) return false;
    return true;
}

bool is_parity_split(const SuperAlgebra& L, const Subspace& s) {
    for (const Vec& row : s.basis())
        if (!s.contains(parity_component(L, row, 0))) return false;
    return true;
}

bool is_ideal(const SuperAlgebra& L, const Subspace& s) {
    for (const Vec& a : s.basis()) {
        for (uint32_t i = 0; i < L.n(); ++i) {
            Vec e = unit_vec(L.n(), i);
            if (!s.contains(L.bracket(a, e)) || !s.contains(L.bracket(e, a))) return false;
        }
    }
    return true;
}

bool is_graded_ideal(const SuperAlgebra& L, const Subspace& s) {
    return is_parity_split(L, s) && is_ideal(L, s);
}

namespace {

std::vector<Subspace> series(const SuperAlgebra& L, const Subspace& start, bool lower_central) {
    if (!is_bracket_closed(L, start))
        throw Error("series: starting subspace is not bracket-closed");
    std::vector<Subspace> out{start};
    Subspace cur = start;
    while (true) {
        std::vector<Vec> rows;
        const auto& left = cur.basis();
        const auto& right = lower_central ? start.basis() : cur.basis();
        for (const Vec& a : left)
            for (const Vec& b : right) rows.push_back(L.bracket(a, b));
        Subspace next = Subspace::span(L.field(), L.n(), rows);
        bool stop = next.is_zero() || next == cur;
        out.push_back(next);
        if (stop) return out;
        cur = std::move(next);
    }
}

}  // namespace

std::vector<Subspace> derived_series(const SuperAlgebra& L, const Subspace& s) {
    return series(L, s, false);
}

std::vector<Subspace> lower_central_series(const SuperAlgebra& L, const Subspace& s) {
    return series(L, s, true);
}

bool is_solvable(const SuperAlgebra& L, const Subspace& s) {
    return derived_series(L, s).back().is_zero();
}

bool is_nilpotent(const SuperAlgebra& L, const Subspace& s) {
    return lower_central_series(L, s).back().is_zero();
}

}  // namespace solvgraph
