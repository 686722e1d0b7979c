#pragma once

/**
 * @file bpell.hpp
 * @brief Bicomplex Pell and Pell-Lucas numbers.
 *
 *   bp(n)  = P_n + i P_{n+1} + j P_{n+2} + ij P_{n+3}
 *   bpl(n) = Q_n + i Q_{n+1} + j Q_{n+2} + ij Q_{n+3}
 *
 * The closed-form evaluators below transcribe published right-hand sides
 * verbatim, including ones that do not hold. Deciding which ones are
 * correct is the job of the identities harness, not of this module.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "bcpell/bicomplex.hpp"
#include "bcpell/params.hpp"
#include "bcpell/pell.hpp"

namespace bcpell {

/// Raised when an exact computation produces a value its construction rules out.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class UnknownIdentityError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

BicomplexZ bp(Index n);
BicomplexZ bpl(Index n);

/// 1 + i a + j a^2 + ij a^3 for a root a of x^2 = 2x + 1.
struct BinetBasis {
    ZSqrt2 alpha;
    ZSqrt2 beta;
    Bicomplex<ZSqrt2> alpha_hat;
    Bicomplex<ZSqrt2> beta_hat;

    static BinetBasis standard();
};

/// (alpha_hat alpha^n - beta_hat beta^n) / (alpha - beta); requires n >= 0.
BicomplexZ binet_bp(Index n);

/// alpha_hat alpha^n + beta_hat beta^n; requires n >= 0.
BicomplexZ binet_bpl(Index n);

/// (-1)^{n+1} bp(n) + (-1)^n Q_n (i + 2j + 5ij); requires n >= 0.
BicomplexZ nega_bp_rhs(Index n);

/// (-1)^n bpl(n) + 8 (-1)^{n+1} P_n (i + 2j + 5ij); requires n >= 0.
BicomplexZ nega_bpl_rhs(Index n);

/// Published right-hand side for a bicomplex identity id such as "Eq2.46".
/// Half-coefficient identities return the doubled form. Throws
/// UnknownIdentityError for ids without a bicomplex closed form.
BicomplexZ theorem_rhs(const std::string& id, const Params& params);

/// Ids accepted by theorem_rhs, sorted.
std::vector<std::string> theorem_rhs_ids();

} // namespace bcpell
