#pragma once

// Exact big-rational arithmetic used throughout the library.
//
// Backed by boost::multiprecision (header-only): cpp_rational keeps the
// canonical form gcd(|num|, den) = 1, den > 0 for us, which is exactly the
// invariant the rest of the code relies on.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace waldzeta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "p/q", or just "p" when q = 1.
inline std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// Parses "p", "-p", or "p/q" (whitespace not allowed). Throws on malformed
// input or zero denominator.
inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    auto bar = s.find('/');
    try {
        if (bar == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, bar));
        BigInt den(s.substr(bar + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in rational string");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational string '" + s + "'");
    }
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to negative power");
        return rat_pow(Rational(1) / base, -e);
    }
    Rational acc(1), b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline double rat_to_double(const Rational& r) { return static_cast<double>(r); }

// Exact integer square root test: returns s >= 0 with s*s == n, or -1.
inline std::int64_t perfect_square_root(std::int64_t n) {
    if (n < 0) return -1;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    for (std::int64_t c = s > 1 ? s - 1 : 0; c <= s + 1; ++c)
        if (c * c == n) return c;
    return -1;
}

}  // namespace waldzeta
