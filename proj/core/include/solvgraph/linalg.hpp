#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solvgraph/fp.hpp"

namespace solvgraph {

/// Coordinate vector over GF(p); one byte per coordinate, residues in [0, p).
using Vec = std::vector<uint8_t>;

Vec zero_vec(uint32_t n);
Vec unit_vec(uint32_t n, uint32_t i);
std::string vec_to_string(const Vec& v);

/// A subspace of GF(p)^n held as its unique reduced row echelon basis.
/// Equality of subspaces is therefore bitwise equality of the rows, which is
/// what makes Subspace usable as a memoization key.
class Subspace {
public:
    Subspace(Fp field, uint32_t ambient_dim)
        : field_(field), ambient_(ambient_dim) {}

    /// RREF span of the given rows. Throws on mixed row lengths.
    static Subspace span(const Fp& field, uint32_t ambient_dim, std::span<const Vec> rows);

    const Fp& field() const { return field_; }
    uint32_t p() const { return field_.p(); }
    uint32_t ambient_dim() const { return ambient_; }
    uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Coefficients of v with respect to the RREF basis, if v lies in the
    /// subspace. For an RREF basis the coefficient of row r is just v at the
    /// pivot column of r.
    std::optional<Vec> coordinates_of(const Vec& v) const;

    /// v reduced modulo this subspace: pivot coordinates eliminated.
    Vec reduce_mod(const Vec& v) const;

    /// Pivot column of each basis row.
    std::vector<uint32_t> pivot_columns() const;

    /// The element with the given coefficient tuple (one coefficient per
    /// basis row).
    Vec element_from_coefficients(const Vec& coeffs) const;

    /// All p^dim elements, sorted lexicographically.
    std::vector<Vec> elements() const;

    bool operator==(const Subspace& other) const {
        return field_.p() == other.field_.p() && ambient_ == other.ambient_ && rows_ == other.rows_;
    }

    size_t hash() const;

private:
    Fp field_;
    uint32_t ambient_;
    std::vector<Vec> rows_;
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

/// Solution space of M x = 0 where M is given by rows over GF(p).
Subspace null_space(const Fp& field, uint32_t ncols, std::span<const Vec> matrix_rows);

uint32_t matrix_rank(const Fp& field, uint32_t ncols, std::span<const Vec> rows);

/// Inverse of a square matrix given by rows; std::nullopt when singular.
std::optional<std::vector<Vec>> matrix_inverse(const Fp& field, const std::vector<Vec>& rows);

/// Every subspace of GF(p)^n, produced by enumerating all reduced row
/// echelon forms. Deterministic order: by dimension, then by pivot set, then
/// by free entries. Count grows with the Gaussian binomials, so callers cap
/// n and p.
std::vector<Subspace> all_subspaces(const Fp& field, uint32_t n);

/// All p^n coordinate vectors in lexicographic order.
std::vector<Vec> all_vectors(const Fp& field, uint32_t n);

}  // namespace solvgraph
