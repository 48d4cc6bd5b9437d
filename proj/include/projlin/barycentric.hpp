#pragma once

// Projective barycentric coordinates with respect to a triangle (E2) or a
// tetrahedron (E3), from a single extended cross product.
//
// The raw cross product of the coordinate rows solves
//
//     sum_i mu_i x_i = x0       (componentwise in [x, y, w])
//
// as mu_i = -xi_i / xi_w. When the vertices carry different homogeneous
// weights that mu is not the Euclidean barycentric vector; the Euclidean
// weights are lambda_i = mu_i * w_i / w0. bary_triangle/bary_tetrahedron
// fold those factors in without dividing (xi_i *= w_i, xi_w *= w0), so the
// result is invariant under rescaling any input point and to_weights yields
// Euclidean weights that sum to one. With all w equal the weighted and raw
// vectors are projectively equivalent.

#include <array>
#include <cstddef>

#include "projlin/crossext.hpp"
#include "projlin/error.hpp"
#include "projlin/projcore.hpp"

namespace projlin {

template <std::size_t K, Ring S>
struct ProjBary {
    static_assert(K == 3 || K == 4);
    std::array<S, K + 1> xi; // [xi_1 .. xi_K : xi_w]

    const S& w() const { return xi[K]; }
    bool is_valid() const { return !detail::all_exact_zero(xi); }
    friend bool operator==(const ProjBary&, const ProjBary&) = default;
};

template <std::size_t K, Field S>
struct BaryWeights {
    std::array<S, K> lambda;

    const S& operator[](std::size_t i) const { return lambda[i]; }
};

enum class Containment { Inside, OnBoundary, Outside };

namespace detail {

template <std::size_t K, Ring S>
ProjResult<ProjBary<K, S>> tag_bary(const std::array<S, K + 1>& xi, const FloatTolerance& tol) {
    switch (classify<GeomKind::Point>(xi, tol)) {
    case ProjTag::Degenerate: return ProjResult<ProjBary<K, S>>::degenerate();
    case ProjTag::AtInfinity: return ProjResult<ProjBary<K, S>>::at_infinity(ProjBary<K, S>{xi});
    case ProjTag::Regular: break;
    }
    return ProjResult<ProjBary<K, S>>::regular(ProjBary<K, S>{xi});
}

template <Ring S>
Vec4<S> bary_cross2(const HomPoint2<S>& x1, const HomPoint2<S>& x2, const HomPoint2<S>& x3,
                    const HomPoint2<S>& x0) {
    const Vec4<S> xs{x1[0], x2[0], x3[0], x0[0]};
    const Vec4<S> ys{x1[1], x2[1], x3[1], x0[1]};
    const Vec4<S> ws{x1[2], x2[2], x3[2], x0[2]};
    return cross4(xs, ys, ws);
}

template <Ring S>
Vec5<S> bary_cross3(const HomPoint3<S>& x1, const HomPoint3<S>& x2, const HomPoint3<S>& x3,
                    const HomPoint3<S>& x4, const HomPoint3<S>& x0) {
    const Vec5<S> xs{x1[0], x2[0], x3[0], x4[0], x0[0]};
    const Vec5<S> ys{x1[1], x2[1], x3[1], x4[1], x0[1]};
    const Vec5<S> zs{x1[2], x2[2], x3[2], x4[2], x0[2]};
    const Vec5<S> ws{x1[3], x2[3], x3[3], x4[3], x0[3]};
    return cross5(xs, ys, zs, ws);
}

} // namespace detail

// Raw cross product of the coordinate rows; mu_i = -xi_i / xi_w solves the
// homogeneous system exactly as posed, without weight correction.
template <Ring S>
ProjResult<ProjBary<3, S>> bary_triangle_raw(const HomPoint2<S>& x1, const HomPoint2<S>& x2,
                                             const HomPoint2<S>& x3, const HomPoint2<S>& x0,
                                             const FloatTolerance& tol = {}) {
    return detail::tag_bary<3>(detail::bary_cross2(x1, x2, x3, x0), tol);
}

template <Ring S>
ProjResult<ProjBary<4, S>> bary_tetrahedron_raw(const HomPoint3<S>& x1, const HomPoint3<S>& x2,
                                                const HomPoint3<S>& x3, const HomPoint3<S>& x4,
                                                const HomPoint3<S>& x0, const FloatTolerance& tol = {}) {
    return detail::tag_bary<4>(detail::bary_cross3(x1, x2, x3, x4, x0), tol);
}

template <Ring S>
ProjResult<ProjBary<3, S>> bary_triangle(const HomPoint2<S>& x1, const HomPoint2<S>& x2, const HomPoint2<S>& x3,
                                         const HomPoint2<S>& x0, const FloatTolerance& tol = {}) {
    Vec4<S> xi = detail::bary_cross2(x1, x2, x3, x0);
    xi[0] = S(xi[0] * x1.w());
    xi[1] = S(xi[1] * x2.w());
    xi[2] = S(xi[2] * x3.w());
    xi[3] = S(xi[3] * x0.w());
    return detail::tag_bary<3>(xi, tol);
}

template <Ring S>
ProjResult<ProjBary<4, S>> bary_tetrahedron(const HomPoint3<S>& x1, const HomPoint3<S>& x2, const HomPoint3<S>& x3,
                                            const HomPoint3<S>& x4, const HomPoint3<S>& x0,
                                            const FloatTolerance& tol = {}) {
    Vec5<S> xi = detail::bary_cross3(x1, x2, x3, x4, x0);
    xi[0] = S(xi[0] * x1.w());
    xi[1] = S(xi[1] * x2.w());
    xi[2] = S(xi[2] * x3.w());
    xi[3] = S(xi[3] * x4.w());
    xi[4] = S(xi[4] * x0.w());
    return detail::tag_bary<4>(xi, tol);
}

// lambda_i = -xi_i / xi_w. The negation lives here and nowhere else.
template <std::size_t K, Field S>
BaryWeights<K, S> to_weights(const ProjBary<K, S>& b, const FloatTolerance& tol = {}) {
    if (classify<GeomKind::Point>(b.xi, tol) != ProjTag::Regular) {
        throw Error(ErrorCode::HomogeneousZero, "xi_w is zero: Euclidean barycentric weights do not exist");
    }
    BaryWeights<K, S> out;
    for (std::size_t i = 0; i < K; ++i) out.lambda[i] = S(-b.xi[i] / b.w());
    return out;
}

// Division-free: lambda_i > 0 iff xi_i and xi_w have opposite signs.
template <std::size_t K, Ring S>
Containment containment(const ProjBary<K, S>& b) {
    const int sw = sign_of(b.w());
    if (sw == 0) throw Error(ErrorCode::HomogeneousZero, "xi_w is zero: containment undefined");
    bool on_boundary = false;
    for (std::size_t i = 0; i < K; ++i) {
        const int s = sign_of(b.xi[i]) * -sw;
        if (s < 0) return Containment::Outside;
        if (s == 0) on_boundary = true;
    }
    return on_boundary ? Containment::OnBoundary : Containment::Inside;
}

} // namespace projlin
