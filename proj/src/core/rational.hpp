#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace rtri {

// Exact rational on 64-bit components, 128-bit intermediates. Denominator is
// always positive and gcd(num, den) == 1. Covers every threshold this
// project needs (class sizes up to ~2^40, u as small fractions); overflow of
// the reduced components is treated as a hard internal error rather than
// silently wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) fail(Status::bad_argument, "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            fail(Status::internal, "rational overflow");
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    Rational operator+(const Rational& o) const {
        return make(static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den,
                    static_cast<__int128>(den) * o.den);
    }
    Rational operator-(const Rational& o) const {
        return make(static_cast<__int128>(num) * o.den - static_cast<__int128>(o.num) * den,
                    static_cast<__int128>(den) * o.den);
    }
    Rational operator*(const Rational& o) const {
        return make(static_cast<__int128>(num) * o.num, static_cast<__int128>(den) * o.den);
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) fail(Status::division_by_zero, "rational division by zero");
        return make(static_cast<__int128>(num) * o.den, static_cast<__int128>(den) * o.num);
    }

    // three-way compare without loss: cross-multiply in 128 bits
    int cmp(const Rational& o) const {
        __int128 lhs = static_cast<__int128>(num) * o.den;
        __int128 rhs = static_cast<__int128>(o.num) * den;
        return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    bool operator==(const Rational& o) const { return cmp(o) == 0; }
    bool operator!=(const Rational& o) const { return cmp(o) != 0; }
    bool operator<(const Rational& o) const { return cmp(o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(o) >= 0; }

    bool is_integer() const { return den == 1; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// smallest integer r with r*r >= x
inline std::uint64_t isqrt_ceil(std::uint64_t x) {
    if (x == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(__builtin_sqrt(static_cast<double>(x)));
    while (r > 0 && (r - 1) * (r - 1) >= x) --r;
    while (r * r < x) ++r;
    return r;
}

} // namespace rtri
