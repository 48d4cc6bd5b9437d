#pragma once

// Meet and join in E2 and E3, and the projectivized linear solver.
//
// By duality a single kernel serves both directions: the line through two
// points and the intersection of two lines are both cross3 of the inputs,
// the plane through three points and the meet of three planes both cross4.
// Ax = b is turned into the homogeneous system [A | -b] [x : w] = 0 whose
// one-dimensional solution space is spanned by the extended cross product of
// the augmented rows. No division happens anywhere in this header.

#include <array>
#include <cstddef>
#include <type_traits>
#include <vector>

#include "projlin/crossext.hpp"
#include "projlin/error.hpp"
#include "projlin/projcore.hpp"

namespace projlin {

template <std::size_t N, Ring S>
struct LinSystem {
    static_assert(N >= 2 && N <= 4, "projectivized solver supports n in {2, 3, 4}");
    Mat<S, N> A;
    Vec<S, N> b;
};

// Runtime-sized system, as read from input files.
template <Ring S>
struct DynLinSystem {
    std::vector<std::vector<S>> A;
    std::vector<S> b;
};

namespace detail {

template <std::size_t N, GeomKind Kind, Ring S>
ProjResult<HomCoords<N, Kind, S>> tagged(const Vec<S, N + 1>& raw, const FloatTolerance& tol) {
    using H = HomCoords<N, Kind, S>;
    switch (classify<Kind>(raw, tol)) {
    case ProjTag::Degenerate:
        return ProjResult<H>::degenerate();
    case ProjTag::AtInfinity:
        return ProjResult<H>::at_infinity(H(raw));
    case ProjTag::Regular:
        break;
    }
    if constexpr (std::is_same_v<S, double>) {
        return ProjResult<H>::regular(H(normalize_pow2(raw)));
    } else {
        return ProjResult<H>::regular(H(raw));
    }
}

template <std::size_t N, Ring S>
Vec<S, N + 1> extended_cross(const std::array<Vec<S, N + 1>, N>& rows) {
    if constexpr (N == 2) {
        return cross3(rows[0], rows[1]);
    } else if constexpr (N == 3) {
        return cross4(rows[0], rows[1], rows[2]);
    } else {
        static_assert(N == 4);
        return cross5(rows[0], rows[1], rows[2], rows[3]);
    }
}

} // namespace detail

template <Ring S>
ProjResult<Line2<S>> join_points2(const HomPoint2<S>& x1, const HomPoint2<S>& x2, const FloatTolerance& tol = {}) {
    return detail::tagged<2, GeomKind::Form>(cross3(x1.coords(), x2.coords()), tol);
}

template <Ring S>
ProjResult<HomPoint2<S>> meet_lines2(const Line2<S>& p1, const Line2<S>& p2, const FloatTolerance& tol = {}) {
    return detail::tagged<2, GeomKind::Point>(cross3(p1.coords(), p2.coords()), tol);
}

template <Ring S>
ProjResult<Plane3<S>> join_points3(const HomPoint3<S>& x1, const HomPoint3<S>& x2, const HomPoint3<S>& x3,
                                   const FloatTolerance& tol = {}) {
    return detail::tagged<3, GeomKind::Form>(cross4(x1.coords(), x2.coords(), x3.coords()), tol);
}

template <Ring S>
ProjResult<HomPoint3<S>> meet_planes3(const Plane3<S>& r1, const Plane3<S>& r2, const Plane3<S>& r3,
                                      const FloatTolerance& tol = {}) {
    return detail::tagged<3, GeomKind::Point>(cross4(r1.coords(), r2.coords(), r3.coords()), tol);
}

// Rows of the augmented matrix [A | -b].
template <std::size_t N, Ring S>
std::array<Vec<S, N + 1>, N> augmented_rows(const LinSystem<N, S>& sys) {
    std::array<Vec<S, N + 1>, N> rows;
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t c = 0; c < N; ++c) rows[r][c] = sys.A[r][c];
        rows[r][N] = S(-sys.b[r]);
    }
    return rows;
}

// Homogeneous solution [x : w] of Ax = b. Regular means A (x / w) = b;
// AtInfinity means det(A) = 0 with a unique direction left; Degenerate means
// the augmented matrix has rank below n.
template <std::size_t N, Ring S>
ProjResult<HomCoords<N, GeomKind::Point, S>> solve_nonhomogeneous(const LinSystem<N, S>& sys,
                                                                  const FloatTolerance& tol = {}) {
    return detail::tagged<N, GeomKind::Point>(detail::extended_cross<N>(augmented_rows(sys)), tol);
}

// Representative of the one-parameter solution family of the (M-1) x M
// homogeneous system given by its rows. The result kind is chosen by the
// caller: Form when the unknowns are hyperplane coefficients (as for the line
// through two points), Point when they are coordinates.
template <GeomKind Kind = GeomKind::Point, Ring S, std::size_t M>
ProjResult<HomCoords<M - 1, Kind, S>> solve_homogeneous(const std::array<Vec<S, M>, M - 1>& rows,
                                                        const FloatTolerance& tol = {}) {
    static_assert(M >= 3 && M <= 5, "homogeneous solver supports 2x3, 3x4 and 4x5 systems");
    return detail::tagged<M - 1, Kind>(detail::extended_cross<M - 1>(rows), tol);
}

// Runtime-dimension entry points. The value vector has n + 1 entries.
template <Ring S>
ProjResult<std::vector<S>> solve_nonhomogeneous(const DynLinSystem<S>& sys, const FloatTolerance& tol = {}) {
    const std::size_t n = sys.A.size();
    if (n < 2 || n > 4) throw Error(ErrorCode::UnsupportedDimension, "system size must be 2, 3 or 4");
    if (sys.b.size() != n) throw Error(ErrorCode::UnsupportedDimension, "right-hand side length mismatch");
    for (const auto& row : sys.A) {
        if (row.size() != n) throw Error(ErrorCode::UnsupportedDimension, "matrix is not square");
    }
    auto widen = [](const auto& result) {
        using V = std::vector<S>;
        if (result.is_degenerate()) return ProjResult<V>::degenerate();
        const auto& c = result.value().coords();
        V v(c.begin(), c.end());
        return result.is_regular() ? ProjResult<V>::regular(std::move(v)) : ProjResult<V>::at_infinity(std::move(v));
    };
    auto run = [&]<std::size_t K>(std::integral_constant<std::size_t, K>) {
        LinSystem<K, S> fixed;
        for (std::size_t r = 0; r < K; ++r) {
            for (std::size_t c = 0; c < K; ++c) fixed.A[r][c] = sys.A[r][c];
            fixed.b[r] = sys.b[r];
        }
        return widen(solve_nonhomogeneous(fixed, tol));
    };
    switch (n) {
    case 2: return run(std::integral_constant<std::size_t, 2>{});
    case 3: return run(std::integral_constant<std::size_t, 3>{});
    default: return run(std::integral_constant<std::size_t, 4>{});
    }
}

template <GeomKind Kind = GeomKind::Point, Ring S>
ProjResult<std::vector<S>> solve_homogeneous(const std::vector<std::vector<S>>& rows, const FloatTolerance& tol = {}) {
    const std::size_t m = rows.size() + 1;
    if (m < 3 || m > 5) throw Error(ErrorCode::UnsupportedDimension, "homogeneous system must be 2x3, 3x4 or 4x5");
    for (const auto& row : rows) {
        if (row.size() != m) throw Error(ErrorCode::UnsupportedDimension, "row length must be one more than row count");
    }
    auto run = [&]<std::size_t M>(std::integral_constant<std::size_t, M>) {
        std::array<Vec<S, M>, M - 1> fixed;
        for (std::size_t r = 0; r + 1 < M; ++r) {
            for (std::size_t c = 0; c < M; ++c) fixed[r][c] = rows[r][c];
        }
        const auto result = solve_homogeneous<Kind>(fixed, tol);
        using V = std::vector<S>;
        if (result.is_degenerate()) return ProjResult<V>::degenerate();
        const auto& c = result.value().coords();
        V v(c.begin(), c.end());
        return result.is_regular() ? ProjResult<V>::regular(std::move(v)) : ProjResult<V>::at_infinity(std::move(v));
    };
    switch (m) {
    case 3: return run(std::integral_constant<std::size_t, 3>{});
    case 4: return run(std::integral_constant<std::size_t, 4>{});
    default: return run(std::integral_constant<std::size_t, 5>{});
    }
}

// Incidence residual <form, point>; zero iff the point lies on the form.
template <std::size_t N, Ring S>
S incidence(const HomCoords<N, GeomKind::Form, S>& form, const HomCoords<N, GeomKind::Point, S>& point) {
    return dot(form.coords(), point.coords());
}

} // namespace projlin
