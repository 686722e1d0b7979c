#pragma once

/**
 * @file bicomplex.hpp
 * @brief Commutative bicomplex numbers q = c1 + i c2 + j c3 + ij c4 over a ring.
 *
 * Basis products:
 *
 *        x |  1    i    j    ij
 *      ----+--------------------
 *        1 |  1    i    j    ij
 *        i |  i   -1    ij  -j
 *        j |  j    ij  -1   -i
 *       ij |  ij  -j   -i    1
 *
 * The algebra has zero divisors, so no division is offered.
 */

#include <array>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "bcpell/ring.hpp"

namespace bcpell {

/// What Bicomplex<R> needs from its scalars.
template <class R>
concept CommutativeRing = std::regular<R> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    R(0);
    R(1);
};

template <CommutativeRing R>
struct Bicomplex {
    R real{0};
    R i{0};
    R j{0};
    R ij{0};

    friend bool operator==(const Bicomplex&, const Bicomplex&) = default;

    static Bicomplex zero() { return {}; }
    static Bicomplex one() { return {R(1), R(0), R(0), R(0)}; }
    static Bicomplex unit_i() { return {R(0), R(1), R(0), R(0)}; }
    static Bicomplex unit_j() { return {R(0), R(0), R(1), R(0)}; }
    static Bicomplex unit_ij() { return {R(0), R(0), R(0), R(1)}; }

    std::array<R, 4> components() const { return {real, i, j, ij}; }

    friend Bicomplex operator+(const Bicomplex& x, const Bicomplex& y)
    {
        return {x.real + y.real, x.i + y.i, x.j + y.j, x.ij + y.ij};
    }
    friend Bicomplex operator-(const Bicomplex& x, const Bicomplex& y)
    {
        return {x.real - y.real, x.i - y.i, x.j - y.j, x.ij - y.ij};
    }
    friend Bicomplex operator-(const Bicomplex& x) { return {-x.real, -x.i, -x.j, -x.ij}; }

    friend Bicomplex operator*(const Bicomplex& x, const Bicomplex& y)
    {
        return {
            x.real * y.real - x.i * y.i - x.j * y.j + x.ij * y.ij,
            x.real * y.i + x.i * y.real - x.j * y.ij - x.ij * y.j,
            x.real * y.j + x.j * y.real - x.i * y.ij - x.ij * y.i,
            x.real * y.ij + x.ij * y.real + x.i * y.j + x.j * y.i,
        };
    }

    friend Bicomplex operator*(const R& lambda, const Bicomplex& x)
    {
        return {lambda * x.real, lambda * x.i, lambda * x.j, lambda * x.ij};
    }

    Bicomplex& operator+=(const Bicomplex& y) { return *this = *this + y; }
    Bicomplex& operator-=(const Bicomplex& y) { return *this = *this - y; }
    Bicomplex& operator*=(const Bicomplex& y) { return *this = *this * y; }

    friend std::ostream& operator<<(std::ostream& os, const Bicomplex& x)
    {
        return os << x.real << " + " << x.i << " i + " << x.j << " j + " << x.ij << " ij";
    }
};

using BicomplexZ = Bicomplex<BigInt>;

template <CommutativeRing R>
Bicomplex<R> bc_add(const Bicomplex<R>& x, const Bicomplex<R>& y) { return x + y; }

template <CommutativeRing R>
Bicomplex<R> bc_scale(const R& lambda, const Bicomplex<R>& x) { return lambda * x; }

template <CommutativeRing R>
Bicomplex<R> bc_mul(const Bicomplex<R>& x, const Bicomplex<R>& y) { return x * y; }

enum class ConjugationKind { I, J, IJ };

inline constexpr std::array<ConjugationKind, 3> all_conjugation_kinds{
    ConjugationKind::I, ConjugationKind::J, ConjugationKind::IJ};

inline const char* to_string(ConjugationKind kind)
{
    switch (kind) {
    case ConjugationKind::I: return "i";
    case ConjugationKind::J: return "j";
    case ConjugationKind::IJ: return "ij";
    }
    return "?";
}

/// I negates (i, ij); J negates (j, ij); IJ negates (i, j).
template <CommutativeRing R>
Bicomplex<R> bc_conj(ConjugationKind kind, const Bicomplex<R>& x)
{
    switch (kind) {
    case ConjugationKind::I: return {x.real, -x.i, x.j, -x.ij};
    case ConjugationKind::J: return {x.real, x.i, -x.j, -x.ij};
    case ConjugationKind::IJ: return {x.real, -x.i, -x.j, x.ij};
    }
    return x;
}

/// The two components of x * conj(x) that can be nonzero for a given kind:
/// I keeps (real, j), J keeps (real, i), IJ keeps (real, ij).
template <CommutativeRing R>
std::pair<R, R> plane_pair(ConjugationKind kind, const Bicomplex<R>& product)
{
    switch (kind) {
    case ConjugationKind::I: return {product.real, product.j};
    case ConjugationKind::J: return {product.real, product.i};
    case ConjugationKind::IJ: return {product.real, product.ij};
    }
    return {product.real, R(0)};
}

struct NormResult {
    BicomplexZ exact_product;
    std::pair<BigInt, BigInt> plane_pair;
    /// (u^2 + v^2)^(1/4); empty when the pair does not fit in binary64.
    std::optional<double> magnitude;

    bool magnitude_representable() const { return magnitude.has_value(); }
};

NormResult bc_norm(ConjugationKind kind, const BicomplexZ& x);

// 4-tuple of decimal strings, e.g. ["0","1","2","5"].
std::string to_json_text(const BicomplexZ& x);
BicomplexZ bicomplex_from_json_text(const std::string& text);

} // namespace bcpell
