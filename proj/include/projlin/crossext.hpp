#pragma once

// The 3D cross product and the extended cross products in 4D and 5D.
//
// The normative definition is the cofactor expansion of the symbolic
// determinant whose first row holds the basis vectors:
//
//     result_k = (-1)^k * minor_k      (k counted from 0)
//
// where minor_k is the determinant of the argument rows with column k
// removed. The antisymmetric matrix forms and the 4D dot/cross decomposition
// are alternative routes to the same numbers and are checked against the
// expansion by the property tests.
//
// Every routine uses only +, - and *, so Int128 instantiations are exact as
// long as the inputs respect the envelope |v| < 2^30 (products of four terms,
// at most 24 of them summed, stay below 2^127).

#include <array>
#include <cstddef>

#include "projlin/scalar.hpp"

namespace projlin {

template <Ring S, std::size_t N>
using Vec = std::array<S, N>;

template <Ring S, std::size_t R, std::size_t C = R>
using Mat = std::array<std::array<S, C>, R>;

template <Ring S> using Vec3 = Vec<S, 3>;
template <Ring S> using Vec4 = Vec<S, 4>;
template <Ring S> using Vec5 = Vec<S, 5>;

template <Ring S, std::size_t N>
S dot(const Vec<S, N>& a, const Vec<S, N>& b) {
    S acc = S(a[0] * b[0]);
    for (std::size_t i = 1; i < N; ++i) acc = S(acc + a[i] * b[i]);
    return acc;
}

template <Ring S, std::size_t R, std::size_t C>
Vec<S, R> mat_vec(const Mat<S, R, C>& m, const Vec<S, C>& v) {
    Vec<S, R> out;
    for (std::size_t r = 0; r < R; ++r) out[r] = dot(m[r], v);
    return out;
}

template <Ring S>
Vec3<S> cross3(const Vec3<S>& a, const Vec3<S>& b) {
    return {S(a[1] * b[2] - a[2] * b[1]),
            S(a[2] * b[0] - a[0] * b[2]),
            S(a[0] * b[1] - a[1] * b[0])};
}

// Skew matrix M(a) with M(a) * b == cross3(a, b).
template <Ring S>
Mat<S, 3> cross3_matrix(const Vec3<S>& a) {
    const S zero = S(0);
    return {{{zero, S(-a[2]), a[1]},
             {a[2], zero, S(-a[0])},
             {S(-a[1]), a[0], zero}}};
}

namespace detail {

template <Ring S>
S det3(const Vec3<S>& r0, const Vec3<S>& r1, const Vec3<S>& r2) {
    return S(r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
           - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
           + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]));
}

template <Ring S, std::size_t N>
Vec<S, N - 1> drop(const Vec<S, N>& v, std::size_t skip) {
    Vec<S, N - 1> out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < N; ++i) {
        if (i != skip) out[k++] = v[i];
    }
    return out;
}

} // namespace detail

template <Ring S>
Vec4<S> cross4(const Vec4<S>& a, const Vec4<S>& b, const Vec4<S>& c) {
    Vec4<S> out;
    for (std::size_t k = 0; k < 4; ++k) {
        const S minor = detail::det3(detail::drop(a, k), detail::drop(b, k), detail::drop(c, k));
        out[k] = (k % 2 == 0) ? minor : S(-minor);
    }
    return out;
}

// The float4 formulation: each component is a triple product of the three
// arguments with one coordinate dropped.
template <Ring S>
Vec4<S> cross4_decomposed(const Vec4<S>& a, const Vec4<S>& b, const Vec4<S>& c) {
    auto pick = [](const Vec4<S>& v, std::size_t i, std::size_t j, std::size_t k) {
        return Vec3<S>{v[i], v[j], v[k]};
    };
    return {
        dot(pick(a, 1, 2, 3), cross3(pick(b, 1, 2, 3), pick(c, 1, 2, 3))),
        S(-dot(pick(a, 0, 2, 3), cross3(pick(b, 0, 2, 3), pick(c, 0, 2, 3)))),
        dot(pick(a, 0, 1, 3), cross3(pick(b, 0, 1, 3), pick(c, 0, 1, 3))),
        S(-dot(pick(a, 0, 1, 2), cross3(pick(b, 0, 1, 2), pick(c, 0, 1, 2)))),
    };
}

// 2x2 sub-determinants delta(i, j) = a_i b_j - a_j b_i of the 2xN row matrix
// [a; b]. Only i < j is stored; the accessor supplies antisymmetry.
template <Ring S, std::size_t N>
class CofactorTable2 {
public:
    CofactorTable2(const Vec<S, N>& a, const Vec<S, N>& b) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = i + 1; j < N; ++j) d_[index(i, j)] = S(a[i] * b[j] - a[j] * b[i]);
        }
    }

    S operator()(std::size_t i, std::size_t j) const {
        if (i == j) return S(0);
        if (i < j) return d_[index(i, j)];
        return S(-d_[index(j, i)]);
    }

private:
    static constexpr std::size_t index(std::size_t i, std::size_t j) {
        // row-major position of (i, j) in the strict upper triangle
        return i * N - i * (i + 1) / 2 + (j - i - 1);
    }

    std::array<S, N * (N - 1) / 2> d_;
};

// 3x3 sub-determinants delta(i, j, k) of the 3xN row matrix [a; b; c],
// expanded along the first row against the 2x2 minors of [b; c].
template <Ring S, std::size_t N>
class CofactorTable3 {
public:
    CofactorTable3(const Vec<S, N>& a, const Vec<S, N>& b, const Vec<S, N>& c) {
        const CofactorTable2<S, N> bc(b, c);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = i + 1; j < N; ++j) {
                for (std::size_t k = j + 1; k < N; ++k) {
                    d_[pos++] = S(a[i] * bc(j, k) - a[j] * bc(i, k) + a[k] * bc(i, j));
                }
            }
        }
    }

    S operator()(std::size_t i, std::size_t j, std::size_t k) const {
        if (i == j || j == k || i == k) return S(0);
        // sort the indices, tracking the permutation parity
        bool odd = false;
        if (i > j) { std::swap(i, j); odd = !odd; }
        if (j > k) { std::swap(j, k); odd = !odd; }
        if (i > j) { std::swap(i, j); odd = !odd; }
        const S& v = d_[index(i, j, k)];
        return odd ? S(-v) : v;
    }

private:
    static constexpr std::size_t index(std::size_t i, std::size_t j, std::size_t k) {
        std::size_t pos = 0;
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                for (std::size_t r = q + 1; r < N; ++r) {
                    if (p == i && q == j && r == k) return pos;
                    ++pos;
                }
            }
        }
        return pos;
    }

    std::array<S, N * (N - 1) * (N - 2) / 6> d_;
};

// Antisymmetric M(a, b) with M * c == cross4(a, b, c). The layout follows the
// classical presentation, including its leading factor (-1)^(n+1) = -1.
template <Ring S>
Mat<S, 4> cross4_matrix(const CofactorTable2<S, 4>& d) {
    const S zero = S(0);
    const Mat<S, 4> printed = {{
        {zero, S(-d(2, 3)), d(1, 3), S(-d(1, 2))},
        {d(2, 3), zero, S(-d(0, 3)), d(0, 2)},
        {S(-d(1, 3)), d(0, 3), zero, S(-d(0, 1))},
        {d(1, 2), S(-d(0, 2)), d(0, 1), zero},
    }};
    Mat<S, 4> out;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) out[r][c] = S(-printed[r][c]);
    }
    return out;
}

template <Ring S>
Mat<S, 4> cross4_matrix(const Vec4<S>& a, const Vec4<S>& b) {
    return cross4_matrix(CofactorTable2<S, 4>(a, b));
}

template <Ring S>
Vec5<S> cross5(const Vec5<S>& a, const Vec5<S>& b, const Vec5<S>& c, const Vec5<S>& d) {
    Vec5<S> out;
    for (std::size_t k = 0; k < 5; ++k) {
        // 4x4 minor, expanded along its first row
        const Vec4<S> ra = detail::drop(a, k);
        const Vec4<S> rb = detail::drop(b, k);
        const Vec4<S> rc = detail::drop(c, k);
        const Vec4<S> rd = detail::drop(d, k);
        S minor = S(0);
        for (std::size_t j = 0; j < 4; ++j) {
            const S sub = detail::det3(detail::drop(rb, j), detail::drop(rc, j), detail::drop(rd, j));
            const S term = S(ra[j] * sub);
            minor = (j % 2 == 0) ? S(minor + term) : S(minor - term);
        }
        out[k] = (k % 2 == 0) ? minor : S(-minor);
    }
    return out;
}

// Antisymmetric M(a, b, c) with M * d == cross5(a, b, c, d). The leading
// factor (-1)^(n+1) is +1 for n = 5.
template <Ring S>
Mat<S, 5> cross5_matrix(const CofactorTable3<S, 5>& t) {
    const S zero = S(0);
    return {{
        {zero, S(-t(2, 3, 4)), t(1, 3, 4), S(-t(1, 2, 4)), t(1, 2, 3)},
        {t(2, 3, 4), zero, S(-t(0, 3, 4)), t(0, 2, 4), S(-t(0, 2, 3))},
        {S(-t(1, 3, 4)), t(0, 3, 4), zero, S(-t(0, 1, 4)), t(0, 1, 3)},
        {t(1, 2, 4), S(-t(0, 2, 4)), t(0, 1, 4), zero, S(-t(0, 1, 2))},
        {S(-t(1, 2, 3)), t(0, 2, 3), S(-t(0, 1, 3)), t(0, 1, 2), zero},
    }};
}

template <Ring S>
Mat<S, 5> cross5_matrix(const Vec5<S>& a, const Vec5<S>& b, const Vec5<S>& c) {
    return cross5_matrix(CofactorTable3<S, 5>(a, b, c));
}

} // namespace projlin
