#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "solvgraph/linalg.hpp"

namespace solvgraph {

/// Raw structure-constant table, the input to validation. Basis convention:
/// indices 0..dim_even-1 are even, dim_even..n-1 are odd, and
/// [e_i, e_j] = sum_k c[(i*n+j)*n+k] e_k.
struct BracketTable {
    uint32_t p = 3;
    uint32_t dim_even = 0;
    uint32_t dim_odd = 0;
    std::vector<uint8_t> c;                 // flattened n*n*n
    std::vector<std::string> basis_names;   // optional; size n when present

    uint32_t n() const { return dim_even + dim_odd; }
    uint8_t& at(uint32_t i, uint32_t j, uint32_t k) { return c[(i * n() + j) * n() + k]; }
    uint8_t at(uint32_t i, uint32_t j, uint32_t k) const { return c[(i * n() + j) * n() + k]; }

    /// Table of the right shape with all brackets zero.
    static BracketTable zero(uint32_t p, uint32_t dim_even, uint32_t dim_odd);
    /// Record [e_i, e_j] = sum coeff_k e_k for i <= j and fill [e_j, e_i] by
    /// super skew-symmetry. Coefficients are reduced mod p.
    void set_bracket(uint32_t i, uint32_t j, std::span<const std::pair<uint32_t, int64_t>> coeffs);
};

/// How hard validation comes down on the axioms.
///
/// Standard checks the grading rule, super skew-symmetry and the super
/// Jacobi identity on triples of pairwise-distinct basis vectors; Jacobi
/// instances with a repeated (necessarily odd) argument and the
/// characteristic-3 cube rule [x,[x,x]] = 0 are still evaluated but reported
/// as warnings. Strict promotes those to errors. Several algebras of record
/// in this area satisfy only the Standard set, so that is the default.
enum class AxiomLevel { Standard, Strict };

struct AxiomIssue {
    enum class Kind {
        FieldNotOddPrime,
        BadShape,
        Grading,
        SkewSymmetry,
        Jacobi,
        JacobiRepeated,   // repeated-argument Jacobi instance (Strict-only)
        CharThreeCube,    // [x,[x,x]] != 0 for an odd x when p = 3 (Strict-only)
        CubeUnchecked,    // dim_odd too large to enumerate the cube rule
    };
    Kind kind;
    std::array<int32_t, 3> indices{-1, -1, -1};
    Vec witness;          // offending odd vector for cube-rule issues
    std::string message;
};

struct ValidationReport {
    std::vector<AxiomIssue> errors;
    std::vector<AxiomIssue> warnings;
    bool ok() const { return errors.empty(); }
    std::string summary() const;
};

class ValidationError : public Error {
public:
    ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

struct ValidationResult;

/// An immutable, validated Lie superalgebra given by structure constants
/// over GF(p). Safe to share across threads.
class SuperAlgebra {
public:
    const Fp& field() const { return field_; }
    uint32_t p() const { return field_.p(); }
    uint32_t dim_even() const { return table_.dim_even; }
    uint32_t dim_odd() const { return table_.dim_odd; }
    uint32_t n() const { return table_.n(); }
    uint8_t parity(uint32_t i) const { return i < table_.dim_even ? 0 : 1; }

    const BracketTable& table() const { return table_; }
    const std::vector<std::string>& basis_names() const { return table_.basis_names; }
    std::string basis_name(uint32_t i) const;

    /// True when the table also satisfies the Strict axiom set.
    bool strict_super() const { return strict_super_; }
    const ValidationReport& validation() const { return validation_; }

    Vec bracket(const Vec& x, const Vec& y) const;

    /// Element rendered as a basis combination, e.g. "h+2x"; "0" for zero.
    std::string label(const Vec& v) const;

    bool operator==(const SuperAlgebra& other) const {
        return p() == other.p() && table_.dim_even == other.table_.dim_even &&
               table_.dim_odd == other.table_.dim_odd && table_.c == other.table_.c;
    }

private:
    friend struct ValidationResult;
    friend ValidationResult validate(const BracketTable&, AxiomLevel);
    SuperAlgebra(BracketTable table, ValidationReport report, bool strict);

    Fp field_;
    BracketTable table_;
    ValidationReport validation_;
    bool strict_super_;
};

using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

struct ValidationResult {
    AlgebraPtr algebra;  // null when the report has errors
    ValidationReport report;
};

ValidationResult validate(const BracketTable& table, AxiomLevel level = AxiomLevel::Standard);

/// validate() that throws ValidationError instead of reporting.
AlgebraPtr make_algebra(const BracketTable& table, AxiomLevel level = AxiomLevel::Standard);

// ---------------------------------------------------------------------------
// Subalgebras, series, ideals

/// Whether generated subalgebras are closed only under the bracket (Plain)
/// or additionally under projection onto homogeneous components (Graded).
enum class ClosureMode { Plain, Graded };

/// A bracket-closed subspace. `graded` records whether the space happens to
/// be closed under parity projection.
struct Subalg {
    Subspace space;
    bool graded = false;
};

Subspace full_space(const SuperAlgebra& L);
Subspace zero_space(const SuperAlgebra& L);

/// Smallest subspace containing `start` and closed under the bracket (both
/// argument orders; for inhomogeneous elements [a,b] and [b,a] are
/// independent). Graded mode also closes under parity projection.
Subspace bracket_closure(const SuperAlgebra& L, const Subspace& start,
                         ClosureMode mode = ClosureMode::Plain);

Subalg generated_subalgebra(const SuperAlgebra& L, std::span<const Vec> generators,
                            ClosureMode mode = ClosureMode::Plain);

bool is_bracket_closed(const SuperAlgebra& L, const Subspace& s);
bool is_parity_split(const SuperAlgebra& L, const Subspace& s);
/// Parity-split subspace with [s, L] contained in s.
bool is_graded_ideal(const SuperAlgebra& L, const Subspace& s);
/// [s, L] contained in s, gradedness not required.
bool is_ideal(const SuperAlgebra& L, const Subspace& s);

/// Even / odd projections of a vector.
Vec parity_component(const SuperAlgebra& L, const Vec& v, uint8_t parity);

/// S = S^(0) >= S^(1) = [S,S] >= ... until a zero or repeated term, which is
/// included so the stabilization is visible. Requires S bracket-closed.
std::vector<Subspace> derived_series(const SuperAlgebra& L, const Subspace& s);

/// S = S^1 >= S^2 = [S,S] >= S^3 = [S^2,S] >= ... with the same stop rule.
std::vector<Subspace> lower_central_series(const SuperAlgebra& L, const Subspace& s);

bool is_solvable(const SuperAlgebra& L, const Subspace& s);
bool is_nilpotent(const SuperAlgebra& L, const Subspace& s);

}  // namespace solvgraph
