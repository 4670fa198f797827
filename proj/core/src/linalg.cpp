#include "solvgraph/linalg.hpp"

#include <algorithm>

namespace solvgraph {

Vec zero_vec(uint32_t n) { return Vec(n, 0); }

Vec unit_vec(uint32_t n, uint32_t i) {
    Vec v(n, 0);
    v.at(i) = 1;
    return v;
}

std::string vec_to_string(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(v[i]));
    }
    s += ")";
    return s;
}

namespace {

// In-place Gauss-Jordan; returns the row count of the reduced matrix.
void reduce_rows(const Fp& f, std::vector<Vec>& mat, uint32_t ncols) {
    size_t r = 0;
    for (uint32_t c = 0; c < ncols && r < mat.size(); ++c) {
        size_t piv = r;
        while (piv < mat.size() && mat[piv][c] == 0) ++piv;
        if (piv == mat.size()) continue;
        std::swap(mat[r], mat[piv]);
        uint8_t inv = f.inv(mat[r][c]);
        for (uint32_t j = c; j < ncols; ++j) mat[r][j] = f.mul(mat[r][j], inv);
        for (size_t i = 0; i < mat.size(); ++i) {
            if (i == r || mat[i][c] == 0) continue;
            uint8_t factor = mat[i][c];
            for (uint32_t j = c; j < ncols; ++j)
                mat[i][j] = f.sub(mat[i][j], f.mul(factor, mat[r][j]));
        }
        ++r;
    }
    mat.resize(r);
}

}  // namespace

Subspace Subspace::span(const Fp& field, uint32_t ambient_dim, std::span<const Vec> rows) {
    std::vector<Vec> mat;
    mat.reserve(rows.size());
    for (const Vec& row : rows) {
        if (row.size() != ambient_dim)
            throw Error("subspace: row length " + std::to_string(row.size()) +
                        " does not match ambient dimension " + std::to_string(ambient_dim));
        mat.push_back(row);
    }
    reduce_rows(field, mat, ambient_dim);
    Subspace s(field, ambient_dim);
    s.rows_ = std::move(mat);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce_mod(v);
    return std::all_of(r.begin(), r.end(), [](uint8_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_ || other.p() != p())
        throw Error("subspace: ambient mismatch in containment test");
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const Vec& row) { return contains(row); });
}

Vec Subspace::reduce_mod(const Vec& v) const {
    if (v.size() != ambient_)
        throw Error("subspace: vector length does not match ambient dimension");
    Vec r = v;
    for (const Vec& row : rows_) {
        uint32_t piv = 0;
        while (piv < ambient_ && row[piv] == 0) ++piv;
        if (r[piv] == 0) continue;
        uint8_t factor = r[piv];
        for (uint32_t j = piv; j < ambient_; ++j)
            r[j] = field_.sub(r[j], field_.mul(factor, row[j]));
    }
    return r;
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec coords(rows_.size(), 0);
    auto pivots = pivot_columns();
    for (size_t i = 0; i < rows_.size(); ++i) coords[i] = v[pivots[i]];
    return coords;
}

std::vector<uint32_t> Subspace::pivot_columns() const {
    std::vector<uint32_t> pivots;
    pivots.reserve(rows_.size());
    for (const Vec& row : rows_) {
        uint32_t piv = 0;
        while (piv < ambient_ && row[piv] == 0) ++piv;
        pivots.push_back(piv);
    }
    return pivots;
}

Vec Subspace::element_from_coefficients(const Vec& coeffs) const {
    if (coeffs.size() != rows_.size()) throw Error("subspace: coefficient count mismatch");
    Vec out(ambient_, 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (uint32_t j = 0; j < ambient_; ++j)
            out[j] = field_.add(out[j], field_.mul(coeffs[i], rows_[i][j]));
    }
    return out;
}

std::vector<Vec> Subspace::elements() const {
    std::vector<Vec> out;
    size_t count = 1;
    for (uint32_t i = 0; i < dim(); ++i) count *= p();
    out.reserve(count);
    Vec coeffs(dim(), 0);
    while (true) {
        out.push_back(element_from_coefficients(coeffs));
        int pos = static_cast<int>(coeffs.size()) - 1;
        while (pos >= 0 && ++coeffs[pos] == p()) coeffs[pos--] = 0;
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

size_t Subspace::hash() const {
    // FNV-1a over the row bytes plus shape
    size_t h = 1469598103934665603ull;
    auto mix = [&h](uint8_t byte) {
        h ^= byte;
        h *= 1099511628211ull;
    };
    mix(static_cast<uint8_t>(p()));
    mix(static_cast<uint8_t>(ambient_));
    for (const Vec& row : rows_)
        for (uint8_t x : row) mix(x);
    return h;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.p() != b.p())
        throw Error("subspace_sum: ambient mismatch");
    std::vector<Vec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.p() != b.p())
        throw Error("subspace_intersection: ambient mismatch");
    // Zassenhaus: reduce [A|A; B|0]; rows with zero left block carry the
    // intersection in their right block.
    const Fp& f = a.field();
    const uint32_t n = a.ambient_dim();
    std::vector<Vec> mat;
    for (const Vec& row : a.basis()) {
        Vec wide(2 * n, 0);
        std::copy(row.begin(), row.end(), wide.begin());
        std::copy(row.begin(), row.end(), wide.begin() + n);
        mat.push_back(std::move(wide));
    }
    for (const Vec& row : b.basis()) {
        Vec wide(2 * n, 0);
        std::copy(row.begin(), row.end(), wide.begin());
        mat.push_back(std::move(wide));
    }
    reduce_rows(f, mat, 2 * n);
    std::vector<Vec> inter;
    for (const Vec& row : mat) {
        bool left_zero = std::all_of(row.begin(), row.begin() + n, [](uint8_t x) { return x == 0; });
        if (left_zero) inter.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::span(f, n, inter);
}

Subspace null_space(const Fp& field, uint32_t ncols, std::span<const Vec> matrix_rows) {
    std::vector<Vec> mat;
    for (const Vec& row : matrix_rows) {
        if (row.size() != ncols) throw Error("null_space: row length mismatch");
        mat.push_back(row);
    }
    reduce_rows(field, mat, ncols);
    std::vector<bool> is_pivot(ncols, false);
    std::vector<uint32_t> pivot_of_row(mat.size());
    for (size_t r = 0; r < mat.size(); ++r) {
        uint32_t c = 0;
        while (c < ncols && mat[r][c] == 0) ++c;
        pivot_of_row[r] = c;
        is_pivot[c] = true;
    }
    std::vector<Vec> basis;
    for (uint32_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(ncols, 0);
        v[free] = 1;
        for (size_t r = 0; r < mat.size(); ++r)
            v[pivot_of_row[r]] = field.neg(mat[r][free]);
        basis.push_back(std::move(v));
    }
    return Subspace::span(field, ncols, basis);
}

uint32_t matrix_rank(const Fp& field, uint32_t ncols, std::span<const Vec> rows) {
    std::vector<Vec> mat(rows.begin(), rows.end());
    reduce_rows(field, mat, ncols);
    return static_cast<uint32_t>(mat.size());
}

std::optional<std::vector<Vec>> matrix_inverse(const Fp& field, const std::vector<Vec>& rows) {
    const uint32_t n = static_cast<uint32_t>(rows.size());
    std::vector<Vec> mat;
    for (uint32_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw Error("matrix_inverse: matrix not square");
        Vec wide(2 * n, 0);
        std::copy(rows[i].begin(), rows[i].end(), wide.begin());
        wide[n + i] = 1;
        mat.push_back(std::move(wide));
    }
    reduce_rows(field, mat, 2 * n);
    if (mat.size() != n) return std::nullopt;
    for (uint32_t i = 0; i < n; ++i) {
        // left block must be the identity
        for (uint32_t j = 0; j < n; ++j)
            if (mat[i][j] != (i == j ? 1 : 0)) return std::nullopt;
    }
    std::vector<Vec> inv(n);
    for (uint32_t i = 0; i < n; ++i) inv[i] = Vec(mat[i].begin() + n, mat[i].end());
    return inv;
}

namespace {

void enumerate_rref(const Fp& f, uint32_t n, const std::vector<uint32_t>& pivots,
                    std::vector<Subspace>& out) {
    const uint32_t k = static_cast<uint32_t>(pivots.size());
    std::vector<bool> is_pivot(n, false);
    for (uint32_t pc : pivots) is_pivot[pc] = true;
    // free positions: row r, column c with c > pivots[r] and c not a pivot
    std::vector<std::pair<uint32_t, uint32_t>> free_cells;
    for (uint32_t r = 0; r < k; ++r)
        for (uint32_t c = pivots[r] + 1; c < n; ++c)
            if (!is_pivot[c]) free_cells.emplace_back(r, c);

    std::vector<Vec> rows(k, Vec(n, 0));
    for (uint32_t r = 0; r < k; ++r) rows[r][pivots[r]] = 1;

    Vec values(free_cells.size(), 0);
    while (true) {
        for (size_t t = 0; t < free_cells.size(); ++t)
            rows[free_cells[t].first][free_cells[t].second] = values[t];
        out.push_back(Subspace::span(f, n, rows));
        int pos = static_cast<int>(values.size()) - 1;
        while (pos >= 0 && ++values[pos] == f.p()) values[pos--] = 0;
        if (pos < 0) break;
    }
}

void pivot_sets(uint32_t n, uint32_t k, uint32_t start, std::vector<uint32_t>& cur,
                const std::function<void(const std::vector<uint32_t>&)>& emit) {
    if (cur.size() == k) {
        emit(cur);
        return;
    }
    for (uint32_t c = start; c < n; ++c) {
        cur.push_back(c);
        pivot_sets(n, k, c + 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Subspace> all_subspaces(const Fp& field, uint32_t n) {
    std::vector<Subspace> out;
    for (uint32_t k = 0; k <= n; ++k) {
        std::vector<uint32_t> cur;
        pivot_sets(n, k, 0, cur,
                   [&](const std::vector<uint32_t>& pv) { enumerate_rref(field, n, pv, out); });
    }
    return out;
}

std::vector<Vec> all_vectors(const Fp& field, uint32_t n) {
    std::vector<Vec> out;
    size_t count = 1;
    for (uint32_t i = 0; i < n; ++i) count *= field.p();
    out.reserve(count);
    Vec v(n, 0);
    while (true) {
        out.push_back(v);
        int pos = static_cast<int>(n) - 1;
        while (pos >= 0 && ++v[pos] == field.p()) v[pos--] = 0;
        if (pos < 0) break;
    }
    return out;
}

}  // namespace solvgraph
