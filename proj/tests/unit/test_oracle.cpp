#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "projlin/oracle.hpp"
#include "support/random.hpp"

using namespace projlin;
using namespace projlin::oracle;
using projlin::testing::Gen;
using I = Int128;
using Q = Rational;

namespace {

template <Ring S>
DenseMatrix<S> random_matrix(Gen& gen, std::size_t r, std::size_t c, long lo, long hi) {
    DenseMatrix<S> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) m(i, j) = S(gen.integer(lo, hi));
    }
    return m;
}

// Leibniz formula: sum over permutations. Independent of the Laplace code.
I det_leibniz(const DenseMatrix<I>& m) {
    const std::size_t n = m.rows();
    std::array<std::size_t, kMaxDim> perm{};
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    I total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        I term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += (inversions % 2) ? I(-term) : term;
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return total;
}

// Plain Gauss-Jordan over rationals, counting pivots.
std::size_t rank_by_gauss(DenseMatrix<Q> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Q f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("det examples") {
    DenseMatrix<I> id(4, 4);
    for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
    CHECK(det(id) == 1);
    CHECK(det(DenseMatrix<I>{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
    CHECK(det(DenseMatrix<I>{{1, 2}, {3, 4}}) == -2);
    CHECK(det(DenseMatrix<I>{{7}}) == 7);
    CHECK_THROWS_AS((void)det(DenseMatrix<I>(2, 3)), Error);
}

TEST_CASE("det matches the Leibniz formula and is multiplicative") {
    Gen gen(31);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int iter = 0; iter < 200; ++iter) {
            const auto a = random_matrix<I>(gen, n, n, -9, 9);
            const auto b = random_matrix<I>(gen, n, n, -9, 9);
            CHECK(det(a) == det_leibniz(a));
            CHECK(det(multiply(a, b)) == det(a) * det(b));
        }
    }
}

TEST_CASE("cramer_solve") {
    const auto x = cramer_solve(DenseMatrix<Q>{{Q(1), Q(0)}, {Q(0), Q(1)}}, DenseVector<Q>{Q(3), Q(4)});
    CHECK(x == DenseVector<Q>{Q(3), Q(4)});
    // the two-line intersection x = 1, y = 2
    const auto y = cramer_solve(DenseMatrix<Q>{{Q(1), Q(0)}, {Q(0), Q(1)}}, DenseVector<Q>{Q(1), Q(2)});
    CHECK(y == DenseVector<Q>{Q(1), Q(2)});
    try {
        (void)cramer_solve(DenseMatrix<Q>{{Q(1), Q(2)}, {Q(2), Q(4)}}, DenseVector<Q>{Q(1), Q(1)});
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularMatrix);
    }
}

TEST_CASE("gauss_solve") {
    CHECK(gauss_solve(DenseMatrix<Q>{{Q(1), Q(0)}, {Q(0), Q(1)}}, DenseVector<Q>{Q(5), Q(-1)}) ==
          DenseVector<Q>{Q(5), Q(-1)});
    try {
        (void)gauss_solve(DenseMatrix<double>(3, 3), DenseVector<double>(3));
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularMatrix);
    }
}

TEST_CASE("cramer and gauss agree exactly under rationals, closely under floats") {
    Gen gen(32);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (int iter = 0; iter < 300; ++iter) {
            const auto a = random_matrix<Q>(gen, n, n, -30, 30);
            if (det(a) == 0) continue;
            DenseVector<Q> b(n);
            for (std::size_t i = 0; i < n; ++i) b[i] = Q(gen.integer(-30, 30));
            CHECK(cramer_solve(a, b) == gauss_solve(a, b));
        }
    }

    // well-conditioned 4x4: diagonally dominant
    for (int iter = 0; iter < 500; ++iter) {
        DenseMatrix<double> a(4, 4);
        DenseVector<double> b(4);
        for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t c = 0; c < 4; ++c) a(r, c) = gen.real(-1, 1);
            a(r, r) += 8.0;
            b[r] = gen.real(-10, 10);
        }
        const auto xc = cramer_solve(a, b);
        const auto xg = gauss_solve(a, b);
        // normwise: small components may lose digits to cancellation
        double mag = 0;
        for (std::size_t i = 0; i < 4; ++i) mag = std::max({mag, std::fabs(xc[i]), std::fabs(xg[i])});
        const double ulp = std::nextafter(mag, INFINITY) - mag;
        for (std::size_t i = 0; i < 4; ++i) CHECK(std::fabs(xc[i] - xg[i]) <= 16 * ulp);
    }
}

TEST_CASE("rank") {
    DenseMatrix<I> id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1;
    CHECK(rank(id) == 3);
    CHECK(rank(DenseMatrix<I>{{2, 4, 6}, {1, 2, 3}, {-3, -6, -9}}) == 1);
    CHECK(rank(DenseMatrix<I>{{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}}) == 2);
    CHECK(rank(DenseMatrix<I>(2, 5)) == 0);
    CHECK(rank(DenseMatrix<I>{{0, 0, 1}, {0, 0, 2}, {0, 1, 0}}) == 2);
}

TEST_CASE("rank agrees with det and with rational elimination") {
    Gen gen(33);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int iter = 0; iter < 300; ++iter) {
            const auto m = random_matrix<I>(gen, n, n, -1, 1);
            CHECK((rank(m) == n) == (det(m) != 0));

            const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 5));
            const auto w = random_matrix<I>(gen, n, cols, -1, 1);
            DenseMatrix<Q> wq(n, cols);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < cols; ++j) wq(i, j) = to_rational(w(i, j));
            }
            CHECK(rank(w) == rank_by_gauss(wq));
            CHECK(rank(wq) == rank_by_gauss(wq));
        }
    }
}
