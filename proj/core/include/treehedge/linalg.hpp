#pragma once

// Minimal dense vector/matrix kernel over a generic scalar. Dimensions here
// are the number of traded assets (single digits), so everything is
// unblocked O(n^3) with a rank-revealing pivot policy that works for both
// exact rationals (first nonzero pivot) and doubles (largest magnitude).

#include "treehedge/errors.hpp"
#include "treehedge/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace treehedge {

template <class R>
using Vec = std::vector<R>;

template <class R>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<R> a;  // row-major

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, R(0)) {}
    R& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

template <class R>
inline R dot(const Vec<R>& x, const Vec<R>& y) {
    if (x.size() != y.size()) throw DimensionError("dot: size mismatch");
    R s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

template <class R>
inline Vec<R> sub(const Vec<R>& x, const Vec<R>& y) {
    if (x.size() != y.size()) throw DimensionError("sub: size mismatch");
    Vec<R> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

template <class R>
inline Vec<R> add(const Vec<R>& x, const Vec<R>& y) {
    if (x.size() != y.size()) throw DimensionError("add: size mismatch");
    Vec<R> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

template <class R>
inline Vec<R> scale(const R& c, const Vec<R>& x) {
    Vec<R> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = c * x[i];
    return z;
}

template <class R>
inline bool is_zero_vec(const Vec<R>& x) {
    for (const auto& v : x)
        if (!eq_tol(v, R(0))) return false;
    return true;
}

template <class R>
inline R norm_sq(const Vec<R>& x) { return dot(x, x); }

// Row echelon reduction in place; returns pivot column per pivot row.
// Exact mode pivots the first nonzero entry, float mode the largest.
template <class R>
inline std::vector<std::size_t> row_reduce(Mat<R>& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t best = r;
        bool found = false;
        if constexpr (num_traits<R>::is_exact) {
            for (std::size_t i = r; i < m.rows; ++i)
                if (m(i, c) != R(0)) { best = i; found = true; break; }
        } else {
            R mx = num_traits<R>::pivot_tol();
            for (std::size_t i = r; i < m.rows; ++i)
                if (abs_val(m(i, c)) > mx) { mx = abs_val(m(i, c)); best = i; found = true; }
        }
        if (!found) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(r, j), m(best, j));
        R piv = m(r, c);
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) /= piv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            R f = m(i, c);
            if (f == R(0)) continue;
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

// Basis of the row space of the given vectors (subset selection via RREF).
template <class R>
inline std::vector<Vec<R>> row_space_basis(const std::vector<Vec<R>>& rows, std::size_t dim) {
    Mat<R> m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
    auto pivots = row_reduce(m);
    std::vector<Vec<R>> basis;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Vec<R> v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = m(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of {h : v.h = 0 for all v in rows}.
template <class R>
inline std::vector<Vec<R>> null_space_basis(const std::vector<Vec<R>>& rows, std::size_t dim) {
    Mat<R> m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec<R>> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        Vec<R> v(dim, R(0));
        v[free] = R(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Gram-Schmidt without normalization: pairwise-orthogonal spanning set.
// Normalizing would force irrational lengths in exact mode; spans and
// projections do not need unit vectors.
template <class R>
inline std::vector<Vec<R>> orthogonalize(std::vector<Vec<R>> vs) {
    std::vector<Vec<R>> out;
    for (auto& v : vs) {
        Vec<R> w = v;
        for (const auto& u : out) {
            R c = dot(w, u) / norm_sq(u);
            w = sub(w, scale(c, u));
        }
        if (!is_zero_vec(w)) out.push_back(std::move(w));
    }
    return out;
}

// Orthogonal projection onto span(basis); basis vectors pairwise orthogonal.
template <class R>
inline Vec<R> project_onto(const Vec<R>& x, const std::vector<Vec<R>>& ortho_basis) {
    Vec<R> p(x.size(), R(0));
    for (const auto& u : ortho_basis) p = add(p, scale(dot(x, u) / norm_sq(u), u));
    return p;
}

// Solve the square system Ax = b; nullopt when singular.
template <class R>
inline std::optional<Vec<R>> solve_square(Mat<R> A, Vec<R> b) {
    const std::size_t n = A.rows;
    if (A.cols != n || b.size() != n) throw DimensionError("solve_square: not square");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = c;
        bool found = false;
        if constexpr (num_traits<R>::is_exact) {
            for (std::size_t i = c; i < n; ++i)
                if (A(i, c) != R(0)) { best = i; found = true; break; }
        } else {
            R mx = num_traits<R>::pivot_tol();
            for (std::size_t i = c; i < n; ++i)
                if (abs_val(A(i, c)) > mx) { mx = abs_val(A(i, c)); best = i; found = true; }
        }
        if (!found) return std::nullopt;
        for (std::size_t j = 0; j < n; ++j) std::swap(A(c, j), A(best, j));
        std::swap(b[c], b[best]);
        R piv = A(c, c);
        for (std::size_t j = c; j < n; ++j) A(c, j) /= piv;
        b[c] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            R f = A(i, c);
            if (f == R(0)) continue;
            for (std::size_t j = c; j < n; ++j) A(i, j) -= f * A(c, j);
            b[i] -= f * b[c];
        }
    }
    return b;
}

}  // namespace treehedge
