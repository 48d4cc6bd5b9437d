#pragma once

// Homogeneous coordinates: the carrier type for points, hyperplane forms and
// free directions, plus the conversions to and from Euclidean space.
//
// Storage order is value part first, homogeneous part last: [x, y : w].

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

#include "projlin/error.hpp"
#include "projlin/scalar.hpp"

namespace projlin {

enum class GeomKind {
    Point,     // position fixed to the origin; w is a pure scale factor
    Form,      // hyperplane coefficients: a line in E2, a plane in E3
    Direction, // free vector, not attached to the origin
};

template <std::size_t N, GeomKind Kind, Ring S>
class HomCoords {
    static_assert(N >= 1 && N <= 4, "at most four value components");

public:
    using scalar_type = S;
    using storage_type = std::array<S, N + 1>;
    static constexpr std::size_t dim = N;
    static constexpr std::size_t size = N + 1;
    static constexpr GeomKind kind = Kind;

    HomCoords() : c_{} {
        for (auto& v : c_) v = S(0);
    }
    explicit HomCoords(const storage_type& c) : c_(c) {}

    const S& operator[](std::size_t i) const { return c_[i]; }
    const storage_type& coords() const { return c_; }
    const S& w() const { return c_[N]; }

    bool is_valid() const {
        return std::any_of(c_.begin(), c_.end(), [](const S& v) { return !(v == S(0)); });
    }

    HomCoords scaled(const S& q) const {
        storage_type out;
        for (std::size_t i = 0; i <= N; ++i) out[i] = S(c_[i] * q);
        return HomCoords(out);
    }

    friend bool operator==(const HomCoords& a, const HomCoords& b) { return a.c_ == b.c_; }

private:
    storage_type c_;
};

template <Ring S> using HomPoint2 = HomCoords<2, GeomKind::Point, S>;
template <Ring S> using HomPoint3 = HomCoords<3, GeomKind::Point, S>;
template <Ring S> using Line2 = HomCoords<2, GeomKind::Form, S>;
template <Ring S> using Plane3 = HomCoords<3, GeomKind::Form, S>;
template <Ring S> using Direction2 = HomCoords<2, GeomKind::Direction, S>;
template <Ring S> using Direction3 = HomCoords<3, GeomKind::Direction, S>;

template <std::size_t N, Field S>
struct EuclidPoint {
    std::array<S, N> coords;

    const S& operator[](std::size_t i) const { return coords[i]; }
    friend bool operator==(const EuclidPoint&, const EuclidPoint&) = default;
};

enum class ProjTag { Regular, AtInfinity, Degenerate };

const char* to_string(ProjTag tag) noexcept;

// Tagged outcome of a projective computation. Degenerate carries no value.
template <typename T>
class ProjResult {
public:
    static ProjResult regular(T value) { return ProjResult(ProjTag::Regular, std::move(value)); }
    static ProjResult at_infinity(T value) { return ProjResult(ProjTag::AtInfinity, std::move(value)); }
    static ProjResult degenerate() { return ProjResult(ProjTag::Degenerate, std::nullopt); }

    ProjTag tag() const { return tag_; }
    bool is_regular() const { return tag_ == ProjTag::Regular; }
    bool is_at_infinity() const { return tag_ == ProjTag::AtInfinity; }
    bool is_degenerate() const { return tag_ == ProjTag::Degenerate; }
    bool has_value() const { return value_.has_value(); }

    const T& value() const {
        if (!value_) throw std::logic_error("degenerate projective result has no value");
        return *value_;
    }

private:
    ProjResult(ProjTag tag, std::optional<T> value) : tag_(tag), value_(std::move(value)) {}

    ProjTag tag_;
    std::optional<T> value_;
};

namespace detail {

template <Ring S, std::size_t M>
S max_magnitude(const std::array<S, M>& c, std::size_t first = 0, std::size_t last = M) {
    S best = S(0);
    for (std::size_t i = first; i < last; ++i) {
        S m = magnitude(c[i]);
        if (best < m) best = m;
    }
    return best;
}

template <Ring S, std::size_t M>
bool all_exact_zero(const std::array<S, M>& c) {
    return std::all_of(c.begin(), c.end(), [](const S& v) { return v == S(0); });
}

} // namespace detail

// Classification of a raw homogeneous vector whose last slot is the
// homogeneous part. Point-like data is at infinity when w vanishes; form-like
// data (lines, planes) is "at infinity" when the value part vanishes, i.e. it
// is the ideal line or plane.
template <GeomKind Kind, Ring S, std::size_t M>
ProjTag classify(const std::array<S, M>& c, const FloatTolerance& tol = {}) {
    if (detail::all_exact_zero(c)) return ProjTag::Degenerate;
    const S scale = detail::max_magnitude(c);
    if constexpr (Kind == GeomKind::Form) {
        const S value_scale = detail::max_magnitude(c, 0, M - 1);
        return is_zero(value_scale, scale, tol) ? ProjTag::AtInfinity : ProjTag::Regular;
    } else {
        return is_zero(c[M - 1], scale, tol) ? ProjTag::AtInfinity : ProjTag::Regular;
    }
}

template <std::size_t N, GeomKind Kind, Ring S>
ProjTag classify(const HomCoords<N, Kind, S>& h, const FloatTolerance& tol = {}) {
    return classify<Kind>(h.coords(), tol);
}

template <std::size_t N, Field S>
EuclidPoint<N, S> to_euclidean(const HomCoords<N, GeomKind::Point, S>& p, const FloatTolerance& tol = {}) {
    if (classify(p, tol) != ProjTag::Regular) {
        throw Error(ErrorCode::HomogeneousZero, "point at infinity has no Euclidean image");
    }
    EuclidPoint<N, S> out;
    for (std::size_t i = 0; i < N; ++i) out.coords[i] = S(p[i] / p.w());
    return out;
}

template <std::size_t N, Field S>
HomCoords<N, GeomKind::Point, S> from_euclidean(const EuclidPoint<N, S>& p) {
    typename HomCoords<N, GeomKind::Point, S>::storage_type c;
    for (std::size_t i = 0; i < N; ++i) c[i] = p.coords[i];
    c[N] = S(1);
    return HomCoords<N, GeomKind::Point, S>(c);
}

// a ~ b iff every 2x2 cross determinant a[i]b[j] - a[j]b[i] vanishes. For
// floats each determinant is compared against max|a| * max|b|.
template <Ring S, std::size_t M>
bool proj_equivalent(const std::array<S, M>& a, const std::array<S, M>& b, const FloatTolerance& tol = {}) {
    if (detail::all_exact_zero(a) || detail::all_exact_zero(b)) return false;
    const S scale = S(detail::max_magnitude(a) * detail::max_magnitude(b));
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = i + 1; j < M; ++j) {
            const S cross = S(a[i] * b[j] - a[j] * b[i]);
            if (!is_zero(cross, scale, tol)) return false;
        }
    }
    return true;
}

template <std::size_t N, GeomKind Kind, Ring S>
bool proj_equivalent(const HomCoords<N, Kind, S>& a, const HomCoords<N, Kind, S>& b, const FloatTolerance& tol = {}) {
    return proj_equivalent(a.coords(), b.coords(), tol);
}

// Scales by a power of two so that the largest magnitude lands in [1, 2).
// Power-of-two scaling is exact in binary floating point, so the Euclidean
// image is unchanged bit for bit.
template <std::size_t M>
std::array<double, M> normalize_pow2(const std::array<double, M>& c) {
    double largest = 0.0;
    for (double v : c) largest = std::max(largest, std::fabs(v));
    if (largest == 0.0 || !std::isfinite(largest)) return c;
    const int shift = -std::ilogb(largest);
    std::array<double, M> out;
    for (std::size_t i = 0; i < M; ++i) out[i] = std::ldexp(c[i], shift);
    return out;
}

template <std::size_t N, GeomKind Kind>
HomCoords<N, Kind, double> normalize_pow2(const HomCoords<N, Kind, double>& h) {
    return HomCoords<N, Kind, double>(normalize_pow2(h.coords()));
}

// A point at infinity read as the free direction it encodes.
template <std::size_t N, Ring S>
HomCoords<N, GeomKind::Direction, S> direction_of(const HomCoords<N, GeomKind::Point, S>& p) {
    return HomCoords<N, GeomKind::Direction, S>(p.coords());
}

} // namespace projlin
