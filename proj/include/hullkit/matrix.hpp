#pragma once

// Dense matrices over a FieldSpec with echelon-form machinery.
//
// Pivoting is positional: in each column the first nonzero entry at or below
// the current pivot row is used. There is no magnitude in a finite field, so
// this is the whole tie-breaking rule, and results are deterministic.
//
// Empty matrices (zero rows and/or zero columns) are ordinary values and
// represent the zero subspace.

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "field.hpp"

namespace hullkit {

/// Column permutation: output column j is input column perm[j].
using Permutation = std::vector<std::size_t>;

inline bool is_permutation(const Permutation& perm, std::size_t n) {
    if (perm.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto j : perm) {
        if (j >= n || seen[j]) return false;
        seen[j] = true;
    }
    return true;
}

inline Permutation identity_permutation(std::size_t n) {
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return perm;
}

inline Permutation inverse_permutation(const Permutation& perm) {
    Permutation inv(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = j;
    return inv;
}

/// (first then second): applying `first` and then `second` equals applying the result.
inline Permutation compose_permutations(const Permutation& first, const Permutation& second) {
    Permutation out(second.size());
    for (std::size_t j = 0; j < second.size(); ++j) out[j] = first[second[j]];
    return out;
}

class FieldMatrix {
   public:
    FieldMatrix() = default;
    FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static FieldMatrix zero(FieldSpec field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
    static FieldMatrix identity(FieldSpec field, std::size_t n) {
        FieldMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
        return m;
    }
    static FieldMatrix from_rows(FieldSpec field, const std::vector<std::vector<FieldElement>>& rows,
                                 std::size_t cols_if_empty = 0) {
        const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
        FieldMatrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) detail::fail(errc::shape_mismatch, "ragged row list");
            for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }
    /// Entries given as canonical element indices.
    static FieldMatrix from_indices(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Elem> values) {
        if (values.size() != rows * cols) detail::fail(errc::shape_mismatch, "entry count does not match shape");
        for (auto v : values)
            if (v >= field.size()) detail::fail(errc::bad_field, "entry outside the field");
        FieldMatrix m(field, rows, cols);
        m.data_ = std::move(values);
        return m;
    }

    FieldSpec field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    FieldElement at(std::size_t r, std::size_t c) const { return {field_.id(), data_[r * cols_ + c]}; }
    void set(std::size_t r, std::size_t c, const FieldElement& v) {
        if (v.field() != field_) detail::fail(errc::spec_mismatch, "entry from a different field");
        data_[r * cols_ + c] = v.index();
    }
    Elem& raw(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Elem>& raw_data() const { return data_; }

    std::vector<FieldElement> row(std::size_t r) const {
        std::vector<FieldElement> out;
        out.reserve(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
        return out;
    }

    bool is_zero() const {
        for (auto v : data_)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    FieldSpec field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

namespace detail {
inline void same_field(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.field() != b.field()) fail(errc::spec_mismatch, "matrices over different fields");
}
}  // namespace detail

inline FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    detail::same_field(a, b);
    if (a.cols() != b.rows())
        detail::fail(errc::shape_mismatch, "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const auto& f = a.field().data();
    FieldMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Elem x = a.raw(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Elem y = b.raw(l, j);
                if (y != 0) out.raw(i, j) = f.add(out.raw(i, j), f.mul(x, y));
            }
        }
    return out;
}

inline FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) { return matmul(a, b); }

inline FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
    detail::same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) detail::fail(errc::shape_mismatch, "cannot add matrices of different shape");
    const auto& f = a.field().data();
    FieldMatrix out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.raw(i, j) = f.add(a.raw(i, j), b.raw(i, j));
    return out;
}

inline FieldMatrix scalar_times(const FieldElement& s, const FieldMatrix& m) {
    const auto& f = m.field().data();
    FieldMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(i, j) = f.mul(s.index(), m.raw(i, j));
    return out;
}

inline FieldMatrix operator-(const FieldMatrix& m) { return scalar_times(-m.field().one(), m); }

inline FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix out(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(j, i) = m.raw(i, j);
    return out;
}

/// Entrywise x -> x^{p^l}.
inline FieldMatrix frobenius_entries(const FieldMatrix& m, std::uint64_t l) {
    FieldMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, frobenius(m.at(i, j), l));
    return out;
}

/// Entrywise x -> x^q over GF(q^2).
inline FieldMatrix conjugate(const FieldMatrix& m) {
    const std::uint64_t q = m.field().sub_order();
    const auto& f = m.field().data();
    FieldMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(i, j) = f.pow(m.raw(i, j), q);
    return out;
}

inline FieldMatrix conj_transpose(const FieldMatrix& m) { return transpose(conjugate(m)); }

/// Rows of `a` followed by rows of `b`.
inline FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b) {
    detail::same_field(a, b);
    if (a.cols() != b.cols()) detail::fail(errc::shape_mismatch, "cannot stack matrices with different column counts");
    FieldMatrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.raw(i, j) = a.raw(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.raw(a.rows() + i, j) = b.raw(i, j);
    return out;
}

/// Columns of `a` followed by columns of `b`.
inline FieldMatrix hstack(const FieldMatrix& a, const FieldMatrix& b) {
    detail::same_field(a, b);
    if (a.rows() != b.rows()) detail::fail(errc::shape_mismatch, "cannot join matrices with different row counts");
    FieldMatrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.raw(i, j) = a.raw(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.raw(i, a.cols() + j) = b.raw(i, j);
    }
    return out;
}

inline FieldMatrix select_columns(const FieldMatrix& m, const std::vector<std::size_t>& cols) {
    FieldMatrix out(m.field(), m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= m.cols()) detail::fail(errc::bad_index, "column index out of range");
            out.raw(i, j) = m.raw(i, cols[j]);
        }
    return out;
}

inline FieldMatrix select_rows(const FieldMatrix& m, std::size_t first, std::size_t count) {
    if (first + count > m.rows()) detail::fail(errc::bad_index, "row range out of bounds");
    FieldMatrix out(m.field(), count, m.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.raw(i, j) = m.raw(first + i, j);
    return out;
}

inline FieldMatrix permute_columns(const FieldMatrix& m, const Permutation& perm) {
    if (!is_permutation(perm, m.cols())) detail::fail(errc::bad_permutation, "not a permutation of the columns");
    return select_columns(m, perm);
}

struct RrefResult {
    FieldMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; zero rows end up at the bottom.
inline RrefResult rref(const FieldMatrix& m) {
    FieldMatrix r = m;
    const auto& f = m.field().data();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t sel = row;
        while (sel < r.rows() && r.raw(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.raw(sel, j), r.raw(row, j));
        const Elem scale = f.inv(r.raw(row, col));
        for (std::size_t j = col; j < r.cols(); ++j) r.raw(row, j) = f.mul(r.raw(row, j), scale);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            const Elem factor = r.raw(i, col);
            if (factor == 0) continue;
            const Elem neg_factor = f.neg(factor);
            for (std::size_t j = col; j < r.cols(); ++j)
                if (r.raw(row, j) != 0) r.raw(i, j) = f.add(r.raw(i, j), f.mul(neg_factor, r.raw(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& m) { return rref(m).pivots.size(); }

/// Basis (as rows) of {x : m * x^T = 0}. Row t is 1 on the t-th free column
/// and 0 on the other free columns.
inline FieldMatrix null_space(const FieldMatrix& m) {
    const auto [r, pivots] = rref(m);
    const auto& f = m.field().data();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FieldMatrix out(m.field(), free_cols.size(), m.cols());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const std::size_t fc = free_cols[t];
        out.raw(t, fc) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out.raw(t, pivots[i]) = f.neg(r.raw(i, fc));
    }
    return out;
}

/// The nonzero rows of rref(m): a basis of the row space.
inline FieldMatrix row_basis(const FieldMatrix& m) {
    auto r = rref(m);
    return select_rows(r.matrix, 0, r.pivots.size());
}

inline bool row_space_contains(const FieldMatrix& space, const FieldMatrix& vectors) {
    if (vectors.rows() == 0) return true;
    return rank(vstack(space, vectors)) == rank(space);
}

inline bool row_space_equal(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.cols()) return false;
    const std::size_t ra = rank(a);
    return ra == rank(b) && rank(vstack(a, b)) == ra;
}

/// Basis of rowspace(a) ∩ rowspace(b), computed as the null space of the
/// stacked null spaces: U ∩ V = (U^⊥ + V^⊥)^⊥.
inline FieldMatrix intersect_row_spaces(const FieldMatrix& a, const FieldMatrix& b) {
    detail::same_field(a, b);
    if (a.cols() != b.cols()) detail::fail(errc::shape_mismatch, "row spaces live in different ambient spaces");
    FieldMatrix basis = null_space(vstack(null_space(a), null_space(b)));
    if (!row_space_contains(a, basis) || !row_space_contains(b, basis))
        detail::fail(errc::verification_failed, "intersection basis escaped one of the row spaces");
    const std::size_t expected = rank(a) + rank(b) - rank(vstack(a, b));
    if (basis.rows() != expected) detail::fail(errc::verification_failed, "intersection dimension disagrees with dim(U+V)");
    return basis;
}

struct StandardForm {
    FieldMatrix matrix;  // (I_k | P)
    Permutation perm;    // applied to the columns of the input
};

/// Brings a full-row-rank generator to (I_k | P): pivot columns first (in
/// order), then the remaining columns in order.
inline StandardForm standard_form(const FieldMatrix& g) {
    auto [r, pivots] = rref(g);
    if (pivots.size() != g.rows())
        detail::fail(errc::rank_deficient,
                     "generator has rank " + std::to_string(pivots.size()) + " < " + std::to_string(g.rows()) + " rows");
    Permutation perm = pivots;
    std::vector<bool> is_pivot(g.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) perm.push_back(c);
    return {permute_columns(r, perm), perm};
}

}  // namespace hullkit
