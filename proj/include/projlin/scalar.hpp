#pragma once

// Scalar capabilities used throughout the kernel.
//
// Three instantiations are provided:
//   double    field, inexact
//   Int128    ring only (no division), exact
//   Rational  field, exact (GMP mpq_class)
//
// Division-free code paths are constrained on Ring and compile for all three.
// Anything that divides is constrained on Field, so Int128 is rejected at
// compile time.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace projlin {

using Int128 = __int128;
using Rational = mpq_class;

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool is_field = true;
    static constexpr bool is_exact = false;
    static constexpr std::string_view name = "float";
};

template <>
struct ScalarTraits<Int128> {
    static constexpr bool is_field = false;
    static constexpr bool is_exact = true;
    static constexpr std::string_view name = "int";
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_field = true;
    static constexpr bool is_exact = true;
    static constexpr std::string_view name = "rational";
};

template <typename S>
concept Ring = requires(const S& a, const S& b) {
    { ScalarTraits<S>::is_exact } -> std::convertible_to<bool>;
    S(a + b);
    S(a - b);
    S(a * b);
    S(-a);
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    S(0);
};

template <typename S>
concept Field = Ring<S> && ScalarTraits<S>::is_field && requires(const S& a, const S& b) {
    S(a / b);
};

template <typename S>
concept ExactScalar = Ring<S> && ScalarTraits<S>::is_exact;

template <typename S>
concept FloatScalar = Ring<S> && !ScalarTraits<S>::is_exact;

// Relative zero test for inexact scalars: v is zero iff |v| <= rel * scale,
// where scale is the magnitude of the object v belongs to. Exact scalars
// ignore this entirely and compare with literal zero.
struct FloatTolerance {
    double rel = 0x1p-40;
};

template <Ring S>
S magnitude(const S& v) {
    if (v < S(0)) return S(-v);
    return v;
}

template <Ring S>
int sign_of(const S& v) {
    if (v < S(0)) return -1;
    if (S(0) < v) return 1;
    return 0;
}

template <Ring S>
bool is_zero(const S& v, const S& scale, const FloatTolerance& tol = {}) {
    if constexpr (ScalarTraits<S>::is_exact) {
        (void)scale;
        (void)tol;
        return v == S(0);
    } else {
        return std::fabs(v) <= tol.rel * scale;
    }
}

// Quotient that is known to be exact (Bareiss elimination). Integer division
// is exact there, so this is the one place a Ring type may divide.
template <ExactScalar S>
S exact_quotient(const S& num, const S& den) {
    return S(num / den);
}

// Runtime choice of scalar type for the CLI and the benchmarks.
enum class ScalarMode { Float, Int, Rational };

const char* to_string(ScalarMode mode) noexcept;
// Accepts "float", "int" and "rational"; throws std::invalid_argument.
ScalarMode parse_scalar_mode(std::string_view text);

std::string to_string(Int128 v);
std::string to_string(const Rational& v);
std::string to_string(double v);

// Parses a decimal integer literal; throws std::invalid_argument on garbage
// and std::out_of_range if it does not fit.
Int128 parse_int128(std::string_view text);

// num/den in lowest terms with a positive denominator.
inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Exact conversion of a finite double to a rational.
inline Rational to_rational(double v) { return Rational(v); }
inline Rational to_rational(Int128 v) {
    mpz_class z(to_string(v));
    return Rational(z);
}
inline Rational to_rational(const Rational& v) { return v; }

} // namespace projlin
