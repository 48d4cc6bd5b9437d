#include "doctest.h"

#include <cmath>

#include "projlin/crossext.hpp"
#include "projlin/oracle.hpp"
#include "support/random.hpp"

using namespace projlin;
using projlin::testing::Gen;
using I = Int128;

namespace {

// result_k = (-1)^k det(rows with column k removed), evaluated by the
// oracle's Laplace expansion.
template <std::size_t N>
Vec<I, N> cross_by_oracle(const std::array<Vec<I, N>, N - 1>& rows) {
    Vec<I, N> out;
    for (std::size_t k = 0; k < N; ++k) {
        oracle::DenseMatrix<I> m(N - 1, N - 1);
        for (std::size_t r = 0; r + 1 < N; ++r) {
            std::size_t c2 = 0;
            for (std::size_t c = 0; c < N; ++c) {
                if (c != k) m(r, c2++) = rows[r][c];
            }
        }
        const I minor = oracle::det(m);
        out[k] = (k % 2 == 0) ? minor : I(-minor);
    }
    return out;
}

template <std::size_t N>
std::size_t rank_of(const std::array<Vec<I, N>, N - 1>& rows) {
    oracle::DenseMatrix<I> m(N - 1, N);
    for (std::size_t r = 0; r + 1 < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) m(r, c) = rows[r][c];
    }
    return oracle::rank(m);
}

template <std::size_t N>
bool is_zero_vec(const Vec<I, N>& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("cross3 examples") {
    CHECK(cross3<I>({1, 0, 0}, {0, 1, 0}) == Vec3<I>{0, 0, 1});
    CHECK(cross3<I>({1, 2, 3}, {1, 2, 3}) == Vec3<I>{0, 0, 0});
    CHECK(cross3<I>({1, 2, 3}, {4, 5, 6}) == Vec3<I>{-3, 6, -3});
}

TEST_CASE("cross3_matrix") {
    CHECK(mat_vec(cross3_matrix<I>({1, 0, 0}), Vec3<I>{0, 1, 0}) == Vec3<I>{0, 0, 1});
    const auto zero = cross3_matrix<I>({0, 0, 0});
    for (const auto& row : zero) CHECK(row == Vec3<I>{0, 0, 0});
    CHECK(mat_vec(cross3_matrix<I>({1, 2, 3}), Vec3<I>{4, 5, 6}) == Vec3<I>{-3, 6, -3});

    Gen gen(1);
    for (int i = 0; i < 1000; ++i) {
        const auto a = gen.vec<I, 3>(-50, 50);
        const auto b = gen.vec<I, 3>(-50, 50);
        CHECK(mat_vec(cross3_matrix(a), b) == cross3(a, b));
        CHECK(cross3(a, b) == cross_by_oracle<3>({a, b}));
    }
}

TEST_CASE("cross4 examples") {
    const Vec4<I> e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0};
    CHECK(cross4(e1, e2, e3) == Vec4<I>{0, 0, 0, -1});
    CHECK(cross4_decomposed(e1, e2, e3) == Vec4<I>{0, 0, 0, -1});
    CHECK(mat_vec(cross4_matrix(e1, e2), e3) == Vec4<I>{0, 0, 0, -1});

    const Vec4<I> a{1, 2, 3, 4}, b{5, 6, 7, 8}, c{9, 10, 11, 12};
    CHECK(rank_of<4>({a, b, c}) == 2);
    CHECK(cross4(a, b, c) == Vec4<I>{0, 0, 0, 0});
    CHECK(cross4(a, a, c) == Vec4<I>{0, 0, 0, 0});
    CHECK(cross4(a, c, c) == Vec4<I>{0, 0, 0, 0});

    for (const auto& row : cross4_matrix(a, a)) CHECK(row == Vec4<I>{0, 0, 0, 0});
}

TEST_CASE("cofactor tables") {
    const Vec4<I> a{1, 2, 3, 4}, b{-2, 0, 5, 1};
    const CofactorTable2<I, 4> d(a, b);
    // delta_24 in 1-based terms: a2 b4 - a4 b2 = 2*1 - 4*0
    CHECK(d(1, 3) == 2);
    CHECK(d(3, 1) == -2);
    CHECK(d(2, 2) == 0);

    const Vec5<I> x{1, 2, 0, -1, 3}, y{0, 1, 4, 2, -2}, z{5, -3, 1, 0, 2};
    const CofactorTable3<I, 5> t(x, y, z);
    // delta_245 (1-based) against the oracle determinant of columns 2, 4, 5
    const oracle::DenseMatrix<I> m{{x[1], x[3], x[4]}, {y[1], y[3], y[4]}, {z[1], z[3], z[4]}};
    CHECK(t(1, 3, 4) == oracle::det(m));
    CHECK(t(3, 1, 4) == -t(1, 3, 4));
    CHECK(t(4, 3, 1) == -t(1, 3, 4));
    CHECK(t(3, 4, 1) == t(1, 3, 4));
    CHECK(t(1, 1, 4) == 0);
}

TEST_CASE("cross4 paths agree with each other and with the oracle") {
    Gen gen(2);
    for (int i = 0; i < 2000; ++i) {
        const auto a = gen.vec<I, 4>(-9, 9);
        const auto b = gen.vec<I, 4>(-9, 9);
        const auto c = gen.vec<I, 4>(-9, 9);
        const auto ref = cross4(a, b, c);
        CHECK(ref == cross_by_oracle<4>({a, b, c}));
        CHECK(mat_vec(cross4_matrix(a, b), c) == ref);
        CHECK(cross4_decomposed(a, b, c) == ref);
    }
}

TEST_CASE("cross5 examples") {
    const Vec5<I> e1{1, 0, 0, 0, 0}, e2{0, 1, 0, 0, 0}, e3{0, 0, 1, 0, 0}, e4{0, 0, 0, 1, 0};
    CHECK(cross5(e1, e2, e3, e4) == Vec5<I>{0, 0, 0, 0, 1});
    CHECK(mat_vec(cross5_matrix(e1, e2, e3), e4) == Vec5<I>{0, 0, 0, 0, 1});
    CHECK(cross5(e1, e2, e1, e4) == Vec5<I>{0, 0, 0, 0, 0});
    for (const auto& row : cross5_matrix(e2, e2, e3)) CHECK(row == Vec5<I>{0, 0, 0, 0, 0});

    Gen gen(3);
    for (int i = 0; i < 2000; ++i) {
        const auto a = gen.vec<I, 5>(-9, 9);
        const auto b = gen.vec<I, 5>(-9, 9);
        const auto c = gen.vec<I, 5>(-9, 9);
        const auto d = gen.vec<I, 5>(-9, 9);
        const auto r = cross5(a, b, c, d);
        CHECK(dot(r, a) == 0);
        CHECK(dot(r, b) == 0);
        CHECK(dot(r, c) == 0);
        CHECK(dot(r, d) == 0);
        CHECK(r == cross_by_oracle<5>({a, b, c, d}));
        CHECK(mat_vec(cross5_matrix(a, b, c), d) == r);
    }
}

TEST_CASE("zero result iff rows are linearly dependent") {
    Gen gen(4);
    int dependent = 0;
    for (int i = 0; i < 3000; ++i) {
        // tiny range so that dependencies actually occur
        const auto a = gen.vec<I, 4>(-1, 1);
        const auto b = gen.vec<I, 4>(-1, 1);
        const auto c = gen.vec<I, 4>(-1, 1);
        const bool zero = is_zero_vec(cross4(a, b, c));
        CHECK(zero == (rank_of<4>({a, b, c}) < 3));
        dependent += zero;

        const auto p = gen.vec<I, 3>(-1, 1);
        const auto q = gen.vec<I, 3>(-1, 1);
        CHECK(is_zero_vec(cross3(p, q)) == (rank_of<3>({p, q}) < 2));

        const auto u = gen.vec<I, 5>(-1, 1);
        const auto v = gen.vec<I, 5>(-1, 1);
        const auto w = gen.vec<I, 5>(-1, 1);
        const auto x = gen.vec<I, 5>(-1, 1);
        CHECK(is_zero_vec(cross5(u, v, w, x)) == (rank_of<5>({u, v, w, x}) < 4));
    }
    CHECK(dependent > 100);
}

// Sum of the absolute values of all terms in each cofactor (the permanent of
// the absolute minor). Rounding differences between evaluation orders are
// bounded relative to this, not to the possibly cancelled result.
static Vec4<double> term_scale4(const Vec4<double>& a, const Vec4<double>& b, const Vec4<double>& c) {
    Vec4<double> out;
    for (std::size_t k = 0; k < 4; ++k) {
        std::array<std::size_t, 3> idx{};
        std::size_t n = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != k) idx[n++] = j;
        }
        double s = 0;
        const std::array<std::array<int, 3>, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        for (const auto& p : perms) {
            s += std::fabs(a[idx[p[0]]] * b[idx[p[1]]] * c[idx[p[2]]]);
        }
        out[k] = s;
    }
    return out;
}

static double ulp_of(double x) {
    x = std::fabs(x);
    return std::nextafter(x, INFINITY) - x;
}

TEST_CASE("float paths agree within 4 ulps of the term scale") {
    Gen gen(6);
    for (int i = 0; i < 5000; ++i) {
        Vec4<double> a, b, c;
        for (std::size_t k = 0; k < 4; ++k) {
            a[k] = gen.real(-1, 1);
            b[k] = gen.real(-1, 1);
            c[k] = gen.real(-1, 1);
        }
        const auto ref = cross4(a, b, c);
        const auto via_matrix = mat_vec(cross4_matrix(a, b), c);
        const auto via_dot = cross4_decomposed(a, b, c);
        const auto scale = term_scale4(a, b, c);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(std::fabs(ref[k] - via_matrix[k]) <= 4 * ulp_of(scale[k]));
            CHECK(std::fabs(ref[k] - via_dot[k]) <= 4 * ulp_of(scale[k]));
        }
    }
}

TEST_CASE("float paths are identical when every product is representable") {
    Gen gen(7);
    for (int i = 0; i < 2000; ++i) {
        const auto a = projlin::testing::convert<double>(gen.vec<I, 4>(-4096, 4096));
        const auto b = projlin::testing::convert<double>(gen.vec<I, 4>(-4096, 4096));
        const auto c = projlin::testing::convert<double>(gen.vec<I, 4>(-4096, 4096));
        const auto ref = cross4(a, b, c);
        CHECK(mat_vec(cross4_matrix(a, b), c) == ref);
        CHECK(cross4_decomposed(a, b, c) == ref);

        const auto d = projlin::testing::convert<double>(gen.vec<I, 5>(-512, 512));
        const auto e = projlin::testing::convert<double>(gen.vec<I, 5>(-512, 512));
        const auto f = projlin::testing::convert<double>(gen.vec<I, 5>(-512, 512));
        const auto g = projlin::testing::convert<double>(gen.vec<I, 5>(-512, 512));
        CHECK(mat_vec(cross5_matrix(d, e, f), g) == cross5(d, e, f, g));
    }
}
