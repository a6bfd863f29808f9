#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "optdeg/polynomial.hpp"

namespace optdeg {

/// Dense rectangular matrix of polynomials from one ring, row-major.
template <class F>
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr<F> ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<F>(ring_)) {}

    static PolyMatrix from_rows(RingPtr<F> ring, const std::vector<std::vector<Polynomial<F>>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        PolyMatrix m(ring, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(Errc::invalid_argument, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = embed(rows[i][j], ring);
        }
        return m;
    }

    const RingPtr<F>& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial<F>& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Polynomial<F>& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Polynomial<F>> row(std::size_t i) const {
        return {entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_};
    }

    PolyMatrix transpose() const {
        PolyMatrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Rows of `top` followed by rows of `bottom`.
    static PolyMatrix stack(const PolyMatrix& top, const PolyMatrix& bottom) {
        if (top.cols_ != bottom.cols_) throw Error(Errc::invalid_argument, "column count mismatch when stacking");
        PolyMatrix m(top.ring_, top.rows_ + bottom.rows_, top.cols_);
        for (std::size_t i = 0; i < top.rows_; ++i)
            for (std::size_t j = 0; j < top.cols_; ++j) m(i, j) = top(i, j);
        for (std::size_t i = 0; i < bottom.rows_; ++i)
            for (std::size_t j = 0; j < bottom.cols_; ++j) m(top.rows_ + i, j) = embed(bottom(i, j), top.ring_);
        return m;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    RingPtr<F> ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Polynomial<F>> entries_;
};

template <class F>
PolyMatrix<F> jacobian(const std::vector<Polynomial<F>>& polys, const std::vector<std::size_t>& vars,
                       const RingPtr<F>& ring) {
    PolyMatrix<F> m(ring, polys.size(), vars.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
        auto p = embed(polys[i], ring);
        for (std::size_t j = 0; j < vars.size(); ++j) {
            if (vars[j] >= ring->size()) throw Error(Errc::undeclared_variable, "jacobian variable out of range");
            m(i, j) = derivative(p, vars[j]);
        }
    }
    return m;
}

template <class F>
PolyMatrix<F> jacobian(const std::vector<Polynomial<F>>& polys, const std::vector<std::string>& vars,
                       const RingPtr<F>& ring) {
    std::vector<std::size_t> idx;
    for (const auto& v : vars) idx.push_back(ring->require(v));
    return jacobian(polys, idx, ring);
}

namespace detail {

// Fraction-free Gaussian elimination; each division by the previous pivot is exact.
template <class F>
Polynomial<F> bareiss(std::vector<std::vector<Polynomial<F>>> a) {
    const std::size_t n = a.size();
    const auto& ring = a[0][0].ring();
    auto prev = Polynomial<F>::constant(ring, ring->field().one());
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial<F>(ring);
            std::swap(a[k], a[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = prev.is_one() ? std::move(v) : exact_divide(v, prev);
            }
            a[i][k] = Polynomial<F>(ring);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace detail

/// Determinant of a square matrix: cofactor expansion up to 3x3, Bareiss elimination above.
template <class F>
Polynomial<F> determinant(const PolyMatrix<F>& m) {
    if (m.rows() != m.cols()) throw Error(Errc::size_out_of_range, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial<F>::constant(m.ring(), m.ring()->field().one());
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3) {
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }
    std::vector<std::vector<Polynomial<F>>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = m.row(i);
    return detail::bareiss(std::move(a));
}

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// All k x k minors, ordered lexicographically by (row set, column set).
template <class F>
std::vector<Polynomial<F>> minors(const PolyMatrix<F>& m, std::size_t k) {
    if (k < 1 || k > std::min(m.rows(), m.cols()))
        throw Error(Errc::size_out_of_range, "minor size " + std::to_string(k) + " out of range for a " +
                                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    std::vector<Polynomial<F>> out;
    const auto row_sets = combinations(m.rows(), k);
    const auto col_sets = combinations(m.cols(), k);
    for (const auto& rs : row_sets) {
        for (const auto& cs : col_sets) {
            PolyMatrix<F> sub(m.ring(), k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
            out.push_back(determinant(sub));
        }
    }
    return out;
}

/// Stacks the gradient row on top of `jac` after scaling column j by the j-th gradient
/// denominator, so every entry is polynomial.
template <class F>
PolyMatrix<F> derationalize(const std::vector<RationalFunction<F>>& grad, const PolyMatrix<F>& jac) {
    if (grad.size() != jac.cols())
        throw Error(Errc::length_mismatch, "gradient length does not match the Jacobian column count");
    const auto& ring = jac.ring();
    PolyMatrix<F> out(ring, jac.rows() + 1, jac.cols());
    for (std::size_t j = 0; j < jac.cols(); ++j) {
        auto den = embed(grad[j].den, ring);
        if (den.is_zero()) throw Error(Errc::zero_denominator, "gradient entry with zero denominator");
        out(0, j) = embed(grad[j].num, ring);
        for (std::size_t i = 0; i < jac.rows(); ++i) out(i + 1, j) = den.is_one() ? jac(i, j) : jac(i, j) * den;
    }
    return out;
}

/// Invertible integer change of coordinates x_i -> sum_j m_ij x_j on a subset of variables.
template <class F>
struct LinearChange {
    std::vector<std::vector<std::int64_t>> matrix;
    PolyMatrix<F> poly_matrix;
    std::map<std::size_t, Polynomial<F>> substitution;

    Polynomial<F> apply(const Polynomial<F>& p) const { return substitute(p, substitution, p.ring()); }
};

template <class F>
LinearChange<F> random_linear_change(const RingPtr<F>& ring, const std::vector<std::size_t>& vars, std::uint64_t seed) {
    if (vars.empty()) throw Error(Errc::invalid_argument, "random_linear_change needs at least one variable");
    Rng rng(seed);
    const std::size_t k = vars.size();
    for (;;) {
        LinearChange<F> change;
        change.matrix.assign(k, std::vector<std::int64_t>(k));
        change.poly_matrix = PolyMatrix<F>(ring, k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                change.matrix[i][j] = uniform_int(rng, -5, 5);
                change.poly_matrix(i, j) = Polynomial<F>::constant(ring, change.matrix[i][j]);
            }
        if (determinant(change.poly_matrix).is_zero()) continue;
        for (std::size_t i = 0; i < k; ++i) {
            Polynomial<F> image(ring);
            for (std::size_t j = 0; j < k; ++j)
                image += Polynomial<F>::variable(ring, vars[j]).scaled(ring->field().from_int(change.matrix[i][j]));
            change.substitution.emplace(vars[i], std::move(image));
        }
        return change;
    }
}

}  // namespace optdeg
