#include "projlin/scalar.hpp"
#include "projlin/error.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace projlin {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::HomogeneousZero: return "HomogeneousZero";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    }
    return "Unknown";
}

const char* to_string(ScalarMode mode) noexcept {
    switch (mode) {
    case ScalarMode::Float: return "float";
    case ScalarMode::Int: return "int";
    case ScalarMode::Rational: return "rational";
    }
    return "float";
}

ScalarMode parse_scalar_mode(std::string_view text) {
    if (text == "float") return ScalarMode::Float;
    if (text == "int") return ScalarMode::Int;
    if (text == "rational") return ScalarMode::Rational;
    throw std::invalid_argument("unknown scalar mode: " + std::string(text));
}

std::string to_string(Int128 v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    // Work in the unsigned domain so INT128_MIN survives negation.
    unsigned __int128 u = negative ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::string to_string(const Rational& v) {
    return v.get_str();
}

std::string to_string(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, end);
}

Int128 parse_int128(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("bad integer literal");
    constexpr unsigned __int128 limit = static_cast<unsigned __int128>(std::numeric_limits<Int128>::max());
    unsigned __int128 acc = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal");
        acc = acc * 10 + static_cast<unsigned>(c - '0');
        if (acc > limit + (negative ? 1 : 0)) throw std::out_of_range("integer literal out of range");
    }
    if (negative) return static_cast<Int128>(static_cast<unsigned __int128>(0) - acc);
    return static_cast<Int128>(acc);
}

} // namespace projlin
