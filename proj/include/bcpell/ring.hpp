#pragma once

/**
 * @file ring.hpp
 * @brief Exact scalar rings: arbitrary-precision integers and Z[sqrt 2].
 *
 * Every sequence value and every identity residual in this library is an
 * element of one of these two rings. Nothing here ever rounds.
 */

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcpell {

using BigInt = boost::multiprecision::cpp_int;

/// Signed sequence index. Negative indices are first-class.
using Index = std::int64_t;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_decimal(const std::string& text);

/// (-1)^k for any integer k.
constexpr int parity_sign(Index k) noexcept { return (k % 2 == 0) ? 1 : -1; }

/// a + b*sqrt(2) with integer coefficients.
struct ZSqrt2 {
    BigInt a;  // rational part
    BigInt b;  // coefficient of sqrt(2)

    ZSqrt2() = default;
    ZSqrt2(BigInt rational, BigInt surd) : a(std::move(rational)), b(std::move(surd)) {}
    // Integers embed as a + 0*sqrt(2); implicit so generic code can write R(0), R(1).
    ZSqrt2(int rational) : a(rational), b(0) {}  // NOLINT(google-explicit-constructor)

    friend bool operator==(const ZSqrt2&, const ZSqrt2&) = default;

    friend ZSqrt2 operator+(const ZSqrt2& x, const ZSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
    friend ZSqrt2 operator-(const ZSqrt2& x, const ZSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
    friend ZSqrt2 operator-(const ZSqrt2& x) { return {-x.a, -x.b}; }

    // sqrt(2) * sqrt(2) = 2
    friend ZSqrt2 operator*(const ZSqrt2& x, const ZSqrt2& y)
    {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }

    ZSqrt2& operator+=(const ZSqrt2& y) { return *this = *this + y; }
    ZSqrt2& operator-=(const ZSqrt2& y) { return *this = *this - y; }
    ZSqrt2& operator*=(const ZSqrt2& y) { return *this = *this * y; }

    friend std::ostream& operator<<(std::ostream& os, const ZSqrt2& x)
    {
        return os << '(' << x.a << ", " << x.b << ')';
    }
};

inline ZSqrt2 zs_add(const ZSqrt2& x, const ZSqrt2& y) { return x + y; }
inline ZSqrt2 zs_mul(const ZSqrt2& x, const ZSqrt2& y) { return x * y; }

/// Galois conjugate a - b*sqrt(2).
inline ZSqrt2 zs_conj(const ZSqrt2& x) { return {x.a, -x.b}; }

/// Field norm a^2 - 2 b^2, multiplicative.
inline BigInt zs_norm(const ZSqrt2& x) { return x.a * x.a - 2 * x.b * x.b; }

/// x^n by square-and-multiply. Negative exponents are rejected: the ring has
/// no inverses in general.
inline ZSqrt2 zs_pow(ZSqrt2 x, Index n)
{
    if (n < 0)
        throw std::invalid_argument("zs_pow: exponent must be non-negative, got " + std::to_string(n));
    ZSqrt2 result{1};
    while (n > 0) {
        if (n & 1)
            result *= x;
        n >>= 1;
        if (n > 0)
            x *= x;
    }
    return result;
}

/// 1 + sqrt(2) and 1 - sqrt(2), the roots of x^2 = 2x + 1.
inline ZSqrt2 silver_alpha() { return {1, 1}; }
inline ZSqrt2 silver_beta() { return {1, -1}; }

} // namespace bcpell
