#include "bcpell/bpell.hpp"

#include <sstream>

namespace bcpell {

namespace {

void require_non_negative(Index n, const char* what)
{
    if (n < 0)
        throw std::invalid_argument(std::string(what) + ": n must be non-negative, got " + std::to_string(n));
}

BicomplexZ consecutive(SequenceKind kind, Index n)
{
    return {seq(kind, n), seq(kind, n + 1), seq(kind, n + 2), seq(kind, n + 3)};
}

Bicomplex<ZSqrt2> hat(const ZSqrt2& root)
{
    return {ZSqrt2{1}, root, zs_pow(root, 2), zs_pow(root, 3)};
}

std::string describe(const Bicomplex<ZSqrt2>& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

// i + 2j + 5ij
BicomplexZ nega_direction() { return {0, 1, 2, 5}; }

} // namespace

BicomplexZ bp(Index n) { return consecutive(SequenceKind::pell, n); }
BicomplexZ bpl(Index n) { return consecutive(SequenceKind::pell_lucas, n); }

BinetBasis BinetBasis::standard()
{
    const ZSqrt2 alpha = silver_alpha();
    const ZSqrt2 beta = silver_beta();
    return {alpha, beta, hat(alpha), hat(beta)};
}

BicomplexZ binet_bp(Index n)
{
    require_non_negative(n, "binet_bp");
    const auto basis = BinetBasis::standard();
    const auto numerator =
        zs_pow(basis.alpha, n) * basis.alpha_hat - zs_pow(basis.beta, n) * basis.beta_hat;

    // alpha - beta = 2 sqrt(2), and every component of the numerator is 2b sqrt(2).
    std::array<BigInt, 4> out;
    const auto parts = numerator.components();
    for (std::size_t k = 0; k < 4; ++k) {
        if (parts[k].a != 0 || boost::multiprecision::bit_test(parts[k].b, 0))
            throw InternalConsistencyError("binet_bp(" + std::to_string(n) +
                                           "): numerator not divisible by 2 sqrt 2: " + describe(numerator));
        out[k] = parts[k].b / 2;
    }
    return {out[0], out[1], out[2], out[3]};
}

BicomplexZ binet_bpl(Index n)
{
    require_non_negative(n, "binet_bpl");
    const auto basis = BinetBasis::standard();
    const auto sum = zs_pow(basis.alpha, n) * basis.alpha_hat + zs_pow(basis.beta, n) * basis.beta_hat;

    std::array<BigInt, 4> out;
    const auto parts = sum.components();
    for (std::size_t k = 0; k < 4; ++k) {
        if (parts[k].b != 0)
            throw InternalConsistencyError("binet_bpl(" + std::to_string(n) +
                                           "): irrational component in " + describe(sum));
        out[k] = parts[k].a;
    }
    return {out[0], out[1], out[2], out[3]};
}

BicomplexZ nega_bp_rhs(Index n)
{
    require_non_negative(n, "nega_bp_rhs");
    return BigInt(parity_sign(n + 1)) * bp(n) + BigInt(parity_sign(n) * pell_lucas(n)) * nega_direction();
}

BicomplexZ nega_bpl_rhs(Index n)
{
    require_non_negative(n, "nega_bpl_rhs");
    return BigInt(parity_sign(n)) * bpl(n) + BigInt(8 * parity_sign(n + 1) * pell(n)) * nega_direction();
}

} // namespace bcpell
