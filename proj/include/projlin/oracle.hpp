#pragma once

// Reference solvers used to check the projective paths: Laplace-expansion
// determinants, Cramer's rule, Gaussian elimination with partial pivoting and
// fraction-free (Bareiss) rank. None of this shares code with crossext.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "projlin/error.hpp"
#include "projlin/scalar.hpp"

namespace projlin::oracle {

inline constexpr std::size_t kMaxDim = 5;

template <Ring S>
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        if (rows == 0 || cols == 0 || rows > kMaxDim || cols > kMaxDim) {
            throw std::invalid_argument("DenseMatrix dimensions must be in 1..5");
        }
        for (auto& v : e_) v = S(0);
    }

    DenseMatrix(std::initializer_list<std::initializer_list<S>> rows)
        : DenseMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged DenseMatrix initializer");
            std::size_t c = 0;
            for (const auto& v : row) (*this)(r, c++) = v;
            ++r;
        }
    }

    template <std::size_t R, std::size_t C>
    static DenseMatrix from(const std::array<std::array<S, C>, R>& m) {
        DenseMatrix out(R, C);
        for (std::size_t r = 0; r < R; ++r) {
            for (std::size_t c = 0; c < C; ++c) out(r, c) = m[r][c];
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& operator()(std::size_t r, std::size_t c) { return e_[r * kMaxDim + c]; }
    const S& operator()(std::size_t r, std::size_t c) const { return e_[r * kMaxDim + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::array<S, kMaxDim * kMaxDim> e_;
};

// Fixed-capacity vector companion to DenseMatrix; never allocates.
template <Ring S>
class DenseVector {
public:
    explicit DenseVector(std::size_t n) : n_(n) {
        if (n == 0 || n > kMaxDim) throw std::invalid_argument("DenseVector size must be in 1..5");
        for (auto& v : e_) v = S(0);
    }
    DenseVector(std::initializer_list<S> values) : DenseVector(values.size()) {
        std::size_t i = 0;
        for (const auto& v : values) e_[i++] = v;
    }
    template <std::size_t N>
    static DenseVector from(const std::array<S, N>& v) {
        DenseVector out(N);
        for (std::size_t i = 0; i < N; ++i) out[i] = v[i];
        return out;
    }

    std::size_t size() const { return n_; }
    S& operator[](std::size_t i) { return e_[i]; }
    const S& operator[](std::size_t i) const { return e_[i]; }
    const S* begin() const { return e_.data(); }
    const S* end() const { return e_.data() + n_; }

    friend bool operator==(const DenseVector& a, const DenseVector& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t i = 0; i < a.n_; ++i) {
            if (!(a.e_[i] == b.e_[i])) return false;
        }
        return true;
    }

private:
    std::size_t n_;
    std::array<S, kMaxDim> e_;
};

namespace detail {

// Laplace expansion along the first row of the submatrix picked out by
// `cols` (a bitmask of still-available columns) starting at `row`.
template <Ring S>
S laplace(const DenseMatrix<S>& m, std::size_t row, unsigned cols) {
    const std::size_t n = m.rows();
    if (row + 1 == n) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (cols & (1u << c)) return m(row, c);
        }
    }
    S acc = S(0);
    bool negate = false;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!(cols & (1u << c))) continue;
        if (!(m(row, c) == S(0))) {
            const S term = S(m(row, c) * laplace(m, row + 1, cols & ~(1u << c)));
            acc = negate ? S(acc - term) : S(acc + term);
        }
        negate = !negate;
    }
    return acc;
}

template <Ring S>
S row_scale_product(const DenseMatrix<S>& m) {
    S prod = S(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        S best = S(0);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const S v = magnitude(m(r, c));
            if (best < v) best = v;
        }
        prod = S(prod * best);
    }
    return prod;
}

} // namespace detail

template <Ring S>
S det(const DenseMatrix<S>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    return detail::laplace(m, 0, (1u << m.cols()) - 1u);
}

// X_i = det(A_i) / det(A). For floats, det(A) counts as zero when it is
// negligible against the product of the row maxima (a Hadamard-style scale).
template <Field S>
DenseVector<S> cramer_solve(const DenseMatrix<S>& a, const DenseVector<S>& b, const FloatTolerance& tol = {}) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "Cramer's rule needs a square matrix");
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    const S d = det(a);
    if (is_zero(d, detail::row_scale_product(a), tol)) {
        throw Error(ErrorCode::SingularMatrix, "det(A) is zero");
    }
    DenseVector<S> x(a.rows());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        DenseMatrix<S> ai = a;
        for (std::size_t r = 0; r < a.rows(); ++r) ai(r, i) = b[r];
        x[i] = S(det(ai) / d);
    }
    return x;
}

// Gaussian elimination with partial pivoting, then back substitution.
template <Field S>
DenseVector<S> gauss_solve(DenseMatrix<S> a, DenseVector<S> b, const FloatTolerance& tol = {}) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw Error(ErrorCode::NotSquare, "elimination needs a square matrix");
    if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");

    S scale = S(0);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const S v = magnitude(a(r, c));
            if (scale < v) scale = v;
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        S best = magnitude(a(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const S v = magnitude(a(r, k));
            if (best < v) {
                best = v;
                pivot = r;
            }
        }
        if (is_zero(best, scale, tol)) throw Error(ErrorCode::SingularMatrix, "zero pivot");
        if (pivot != k) {
            a.swap_rows(k, pivot);
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const S factor = S(a(r, k) / a(k, k));
            if (factor == S(0)) continue;
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) = S(a(r, c) - factor * a(k, c));
            a(r, k) = S(0);
            b[r] = S(b[r] - factor * b[k]);
        }
    }

    DenseVector<S> x(n);
    for (std::size_t i = n; i-- > 0;) {
        S acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc = S(acc - a(i, c) * x[c]);
        x[i] = S(acc / a(i, i));
    }
    return x;
}

// Rank by Bareiss fraction-free elimination. Every division is exact.
template <ExactScalar S>
std::size_t rank(DenseMatrix<S> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    S prev = S(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c) == S(0)) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) = exact_quotient(S(m(r, c) * m(i, j) - m(i, c) * m(r, j)), prev);
            }
            m(i, c) = S(0);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

template <Ring S>
DenseMatrix<S> multiply(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("inner dimensions differ");
    DenseMatrix<S> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            S acc = S(0);
            for (std::size_t k = 0; k < a.cols(); ++k) acc = S(acc + a(i, k) * b(k, j));
            out(i, j) = acc;
        }
    }
    return out;
}

} // namespace projlin::oracle
