// The identity registry.
//
// Left-hand sides here are built from definitions only: sequence values,
// bp/bpl, bicomplex arithmetic and conjugation. Bicomplex right-hand sides
// come from theorem_rhs; scalar right-hand sides are written inline.

#include <algorithm>

#include "bcpell/bpell.hpp"
#include "bcpell/identities.hpp"

namespace bcpell {

namespace {

// Default domains.
constexpr Index arity1_lo = 2;
constexpr Index arity1_hi = 60;
constexpr Index arity2_hi = 30;

BigInt sq(const BigInt& x) { return x * x; }
BigInt sign(Index k) { return BigInt(parity_sign(k)); }

Domain catalan_domain()
{
    return Domain({{'r', 1, 5, std::nullopt}, {'n', 0, 30, 'r'}});
}

Domain catalan_aux_domain()
{
    return Domain({{'r', 1, 5, std::nullopt}, {'n', 0, 30, 'r'}, {'m', 0, 10, 'n'}});
}

class Builder {
public:
    void scalar(std::string id, std::string ref, Domain d, std::function<BigInt(const Params&)> lhs,
                std::function<BigInt(const Params&)> rhs, int scale = 1)
    {
        specs_.push_back({std::move(id), std::move(ref), Codomain::scalar, std::move(d),
                          [f = std::move(lhs)](const Params& p) { return Value{f(p)}; },
                          [f = std::move(rhs)](const Params& p) { return Value{f(p)}; }, scale});
    }

    /// Right side from theorem_rhs under the same id.
    void bicomplex(const std::string& id, std::string ref, Domain d, std::function<BicomplexZ(const Params&)> lhs,
                   int scale = 1)
    {
        specs_.push_back({id, std::move(ref), Codomain::bicomplex, std::move(d),
                          [f = std::move(lhs)](const Params& p) { return Value{f(p)}; },
                          [id](const Params& p) { return Value{theorem_rhs(id, p)}; }, scale});
    }

    std::vector<IdentitySpec> finish()
    {
        std::sort(specs_.begin(), specs_.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
        validate_registry(specs_);
        return std::move(specs_);
    }

private:
    std::vector<IdentitySpec> specs_;
};

void add_scalar_identities(Builder& b)
{
    const auto d1 = range_n(arity1_lo, arity1_hi);
    const auto d2 = range_mn(0, arity2_hi);

    b.scalar("Eq1.06", "(1.6) P_m P_{n+1} + P_{m-1} P_n = P_{m+n}", d2,
             [](const Params& p) { return pell(p.m()) * pell(p.n() + 1) + pell(p.m() - 1) * pell(p.n()); },
             [](const Params& p) { return pell(p.m() + p.n()); });
    b.scalar("Eq1.07", "(1.7) P_m P_{n+1} - P_{m+1} P_n = (-1)^n P_{m-n}", d2,
             [](const Params& p) { return pell(p.m()) * pell(p.n() + 1) - pell(p.m() + 1) * pell(p.n()); },
             [](const Params& p) { return sign(p.n()) * pell(p.m() - p.n()); });
    b.scalar("Eq1.08", "(1.8) P_{n-1} P_{n+1} - P_n^2 = (-1)^n", d1,
             [](const Params& p) { return pell(p.n() - 1) * pell(p.n() + 1) - sq(pell(p.n())); },
             [](const Params& p) { return sign(p.n()); });
    b.scalar("Eq1.09", "(1.9) P_n^2 + P_{n+1}^2 = P_{2n+1}", d1,
             [](const Params& p) { return sq(pell(p.n())) + sq(pell(p.n() + 1)); },
             [](const Params& p) { return pell(2 * p.n() + 1); });
    b.scalar("Eq1.10", "(1.10) P_{n+1}^2 - P_{n-1}^2 = 2 P_{2n}", d1,
             [](const Params& p) { return sq(pell(p.n() + 1)) - sq(pell(p.n() - 1)); },
             [](const Params& p) { return 2 * pell(2 * p.n()); });
    b.scalar("Eq1.11", "(1.11) 2 P_{n+1} P_n - 2 P_n^2 = P_{2n}", d1,
             [](const Params& p) { return 2 * pell(p.n() + 1) * pell(p.n()) - 2 * sq(pell(p.n())); },
             [](const Params& p) { return pell(2 * p.n()); });
    b.scalar("Eq1.12", "(1.12) P_n^2 + P_{n+3}^2 = 5 P_{2n+3}", d1,
             [](const Params& p) { return sq(pell(p.n())) + sq(pell(p.n() + 3)); },
             [](const Params& p) { return 5 * pell(2 * p.n() + 3); });
    b.scalar("Eq1.13", "(1.13) P_{2n+1} + P_{2n} = 2 P_{n+1}^2 - 2 P_n^2 - (-1)^n", d1,
             [](const Params& p) { return pell(2 * p.n() + 1) + pell(2 * p.n()); },
             [](const Params& p) { return 2 * sq(pell(p.n() + 1)) - 2 * sq(pell(p.n())) - sign(p.n()); });
    b.scalar(
        "Eq1.14", "(1.14) P_n^2 + P_{n-1} P_{n+1} = Q_n^2 / 4, checked as 4 * lhs = Q_n^2", d1,
        [](const Params& p) { return sq(pell(p.n())) + pell(p.n() - 1) * pell(p.n() + 1); },
        [](const Params& p) { return sq(pell_lucas(p.n())); }, 4);
    b.scalar("Eq1.15", "(1.15) P_{n+1} + P_{n-1} = Q_n", d1,
             [](const Params& p) { return pell(p.n() + 1) + pell(p.n() - 1); },
             [](const Params& p) { return pell_lucas(p.n()); });
    b.scalar("Eq1.16", "(1.16) P_n Q_n = P_{2n}", d1,
             [](const Params& p) { return pell(p.n()) * pell_lucas(p.n()); },
             [](const Params& p) { return pell(2 * p.n()); });
    b.scalar("Eq1.17", "(1.17) Q_n = 2 q_n", d1, [](const Params& p) { return pell_lucas(p.n()); },
             [](const Params& p) { return 2 * modified_pell(p.n()); });
    b.scalar("Eq1.18", "(1.18) P_{n+1} - P_n = q_n", d1,
             [](const Params& p) { return pell(p.n() + 1) - pell(p.n()); },
             [](const Params& p) { return modified_pell(p.n()); });
    b.scalar("Eq1.19", "(1.19) P_{n+1} + P_n = q_{n+1}", d1,
             [](const Params& p) { return pell(p.n() + 1) + pell(p.n()); },
             [](const Params& p) { return modified_pell(p.n() + 1); });

    // Auxiliary identities quoted at the end of the Catalan proof.
    b.scalar("Eq2.49-aux1", "(2.49) proof: P_m P_n - P_{m+r} P_{n-r} = (-1)^{n-r} P_{m+r-n} P_r",
             catalan_aux_domain(),
             [](const Params& p) {
                 return pell(p.m()) * pell(p.n()) - pell(p.m() + p.r()) * pell(p.n() - p.r());
             },
             [](const Params& p) { return sign(p.n() - p.r()) * pell(p.m() + p.r() - p.n()) * pell(p.r()); });
    b.scalar("Eq2.49-aux2", "(2.49) proof: P_n P_n - P_{n-r} P_{n+r} = (-1)^{n-r} P_r^2", catalan_domain(),
             [](const Params& p) { return sq(pell(p.n())) - pell(p.n() - p.r()) * pell(p.n() + p.r()); },
             [](const Params& p) { return sign(p.n() - p.r()) * sq(pell(p.r())); });
    b.scalar("Eq2.49-aux3", "(2.49) proof: Q_m Q_n - Q_{m+r} Q_{n-r} = (-1)^{n-r+1} P_{m+r-n} P_r",
             catalan_aux_domain(),
             [](const Params& p) {
                 return pell_lucas(p.m()) * pell_lucas(p.n()) -
                        pell_lucas(p.m() + p.r()) * pell_lucas(p.n() - p.r());
             },
             [](const Params& p) { return sign(p.n() - p.r() + 1) * pell(p.m() + p.r() - p.n()) * pell(p.r()); });
    b.scalar("Eq2.49-aux4", "(2.49) proof: Q_n Q_n - Q_{n-r} Q_{n+r} = (-1)^{n-r+1} P_r^2", catalan_domain(),
             [](const Params& p) {
                 return sq(pell_lucas(p.n())) - pell_lucas(p.n() - p.r()) * pell_lucas(p.n() + p.r());
             },
             [](const Params& p) { return sign(p.n() - p.r() + 1) * sq(pell(p.r())); });
}

BicomplexZ conj_self_product(ConjugationKind kind, Index n) { return bp(n) * bc_conj(kind, bp(n)); }

BicomplexZ conj_self_product_pair(ConjugationKind kind, Index n)
{
    return conj_self_product(kind, n) + conj_self_product(kind, n - 1);
}

// BP_n - i BP_{n+1} + s_j j BP_{n+2} - ij BP_{n+3}
BicomplexZ unit_combination(Index n, int j_sign)
{
    return bp(n) - BicomplexZ::unit_i() * bp(n + 1) + BigInt(j_sign) * (BicomplexZ::unit_j() * bp(n + 2)) -
           BicomplexZ::unit_ij() * bp(n + 3);
}

void add_bicomplex_identities(Builder& b)
{
    const auto d1 = range_n(arity1_lo, arity1_hi);
    const auto d2 = range_mn(0, arity2_hi);

    b.bicomplex("Eq2.07", "(2.7) BP_n x BP_m componentwise, real part as printed with -P_{n+3} P_{m+3}", d2,
                [](const Params& p) { return bp(p.n()) * bp(p.m()); });

    const std::pair<const char*, ConjugationKind> conj_ids[] = {
        {"Eq2.11", ConjugationKind::I}, {"Eq2.12", ConjugationKind::J}, {"Eq2.13", ConjugationKind::IJ}};
    for (const auto& [id, kind] : conj_ids) {
        const auto k = kind;
        b.bicomplex(id,
                    std::string("(") + (id + 2) + ") (BP_n x BP_m)*_" + to_string(k) + " = (BP_m)*_" +
                        to_string(k) + " x (BP_n)*_" + to_string(k),
                    d2, [k](const Params& p) { return bc_conj(k, bp(p.n()) * bp(p.m())); });
    }

    b.bicomplex("Eq2.14", "(2.14) BP_n x (BP_n)*_i = 2(-Q_{2n+3} + j P_{2n+3})", d1,
                [](const Params& p) { return conj_self_product(ConjugationKind::I, p.n()); });
    b.bicomplex("Eq2.15", "(2.15) BP_n x (BP_n)*_j = (P_n^2 - P_{n+1}^2 + P_{n+2}^2 - P_{n+3}^2) + 4i(P_{2n+3} + P_n P_{n+1})",
                d1, [](const Params& p) { return conj_self_product(ConjugationKind::J, p.n()); });
    b.bicomplex("Eq2.16", "(2.16) BP_n x (BP_n)*_ij = 6 P_{2n+3} + 4ij(-1)^{n+1}", d1,
                [](const Params& p) { return conj_self_product(ConjugationKind::IJ, p.n()); });

    const auto sum_i = [](const Params& p) { return conj_self_product_pair(ConjugationKind::I, p.n()); };
    const auto sum_j = [](const Params& p) { return conj_self_product_pair(ConjugationKind::J, p.n()); };
    b.bicomplex("Eq2.17-stmt", "(2.17) statement: sum of i-conjugate products = 2(8 P_{2n+2} + j Q_{2n+2})", d1,
                sum_i);
    b.bicomplex("Eq2.17-proof", "(2.17) proof: = 2[(Q_{2n+3} + Q_{2n+1}) + j(P_{2n+3} + P_{2n+1})]", d1, sum_i);
    b.bicomplex("Eq2.18-stmt", "(2.18) statement: sum of j-conjugate products = 12(-P_{2n+2} + i P_{2n+2})", d1,
                sum_j);
    b.bicomplex("Eq2.18-proof", "(2.18) proof: = (P_{n-1}^2 - P_{n+3}^2) + 4i(P_n Q_n + Q_{2n+2})", d1, sum_j);
    b.bicomplex("Eq2.19", "(2.19) sum of ij-conjugate products = 6 Q_{2n+2}", d1,
                [](const Params& p) { return conj_self_product_pair(ConjugationKind::IJ, p.n()); });

    const auto norm_product = [](ConjugationKind kind) {
        return [kind](const Params& p) { return bc_norm(kind, bp(p.n())).exact_product; };
    };
    b.bicomplex("Eq2.20", "(2.20) i-norm of BP_n: product inside |.| is 2(-Q_{2n+3} + j P_{2n+3})", d1,
                norm_product(ConjugationKind::I));
    b.bicomplex("Eq2.21", "(2.21) j-norm of BP_n: product inside |.| as in (2.15)", d1,
                norm_product(ConjugationKind::J));
    b.bicomplex("Eq2.22-stmt", "(2.22) statement: ij-norm of BP_n with 6 Q_{2n+3} + 4ij(-1)^{n+1}", d1,
                norm_product(ConjugationKind::IJ));
    b.bicomplex("Eq2.22-proof", "(2.22) via (2.16): ij-norm of BP_n with 6 P_{2n+3} + 4ij(-1)^{n+1}", d1,
                norm_product(ConjugationKind::IJ));

    b.bicomplex("Eq2.23", "(2.23) BP_m BP_n + BP_{m+1} BP_{n+1} = 4(Q_{m+n+4} - i Q_{m+n+4} - j P_{m+n+4} + ij P_{m+n+4})",
                d2, [](const Params& p) { return bp(p.m()) * bp(p.n()) + bp(p.m() + 1) * bp(p.n() + 1); });
    b.bicomplex("Eq2.24", "(2.24) (BP_n)^2 closed form", d1, [](const Params& p) { return bp(p.n()) * bp(p.n()); });
    b.bicomplex("Eq2.25", "(2.25) (BP_n)^2 + (BP_{n+1})^2 = 4(Q_{2n+4} - i Q_{2n+4} - j P_{2n+4} + ij P_{2n+4})", d1,
                [](const Params& p) { return bp(p.n()) * bp(p.n()) + bp(p.n() + 1) * bp(p.n() + 1); });
    b.bicomplex("Eq2.26", "(2.26) (BP_{n+1})^2 - (BP_{n-1})^2 = -4(P_{2n+1} + 2i Q_{2n+3} + 2j P_{2n+3} + 2ij P_{2n+3})",
                d1, [](const Params& p) { return bp(p.n() + 1) * bp(p.n() + 1) - bp(p.n() - 1) * bp(p.n() - 1); });

    const auto plus_j = [](const Params& p) { return unit_combination(p.n(), +1); };
    const auto minus_j = [](const Params& p) { return unit_combination(p.n(), -1); };
    b.bicomplex("Eq2.27-stmt", "(2.27) statement: BP_n - i BP_{n+1} + j BP_{n+2} - ij BP_{n+3} = 4(-4 P_{n+3} + j q_{n+3})",
                d1, plus_j);
    b.bicomplex("Eq2.27-proof", "(2.27) proof result paired with the (2.27) left side", d1, plus_j);
    b.bicomplex("Eq2.28-stmt",
                "(2.28) statement: BP_n - i BP_{n+1} - j BP_{n+2} - ij BP_{n+3} = 2(q_{n+1} - P_{n+5} + i P_{n+5} + j P_{n+4} - ij P_{n+3})",
                d1, minus_j);
    b.bicomplex("Eq2.28-proof", "(2.28) proof: = -(4 P_{n+1} + P_n) + 2i P_{n+5} + 2j P_{n+4} - 2ij P_{n+3}", d1,
                minus_j);

    b.bicomplex("Eq2.29", "(2.29) d'Ocagne: BP_m BP_{n+1} - BP_{m+1} BP_n = 12(-1)^n P_{m-n}(j + ij)", d2,
                [](const Params& p) { return bp(p.m()) * bp(p.n() + 1) - bp(p.m() + 1) * bp(p.n()); });

    struct Linear {
        const char* id;
        const char* ref;
        std::function<BicomplexZ(Index)> lhs;
        int scale;
    };
    const Linear linear[] = {
        {"Eq2.30", "(2.30) BP_{n+1} + BP_{n-1} = BPL_n", [](Index n) { return bp(n + 1) + bp(n - 1); }, 1},
        {"Eq2.31", "(2.31) BP_{n+1} - BP_{n-1} = 2 BP_n", [](Index n) { return bp(n + 1) - bp(n - 1); }, 1},
        {"Eq2.32", "(2.32) BP_{n+2} + BP_{n-2} = 6 BP_n", [](Index n) { return bp(n + 2) + bp(n - 2); }, 1},
        {"Eq2.33", "(2.33) BP_{n+2} - BP_{n-2} = 2 BPL_n", [](Index n) { return bp(n + 2) - bp(n - 2); }, 1},
        {"Eq2.34", "(2.34) BP_{n+1} + BP_n = 1/2 BPL_{n+1}, checked doubled", [](Index n) { return bp(n + 1) + bp(n); },
         2},
        {"Eq2.35", "(2.35) BP_{n+1} - BP_n = 1/2 BPL_n, checked doubled", [](Index n) { return bp(n + 1) - bp(n); }, 2},
        {"Eq2.36", "(2.36) BPL_{n+1} + BPL_{n-1} = 4 BP_n", [](Index n) { return bpl(n + 1) + bpl(n - 1); }, 1},
        {"Eq2.37", "(2.37) BPL_{n+1} - BPL_{n-1} = 2 BPL_n", [](Index n) { return bpl(n + 1) - bpl(n - 1); }, 1},
        {"Eq2.38", "(2.38) BPL_{n+2} + BPL_{n-2} = 6 BPL_n", [](Index n) { return bpl(n + 2) + bpl(n - 2); }, 1},
        {"Eq2.39", "(2.39) BPL_{n+2} - BPL_{n-2} = 8 BP_n", [](Index n) { return bpl(n + 2) - bpl(n - 2); }, 1},
        {"Eq2.40", "(2.40) BPL_{n+1} + BPL_n = 4 BP_{n+1}", [](Index n) { return bpl(n + 1) + bpl(n); }, 1},
        {"Eq2.41", "(2.41) BPL_{n+1} - BPL_n = 4 BP_n", [](Index n) { return bpl(n + 1) - bpl(n); }, 1},
    };
    for (const auto& l : linear)
        b.bicomplex(l.id, l.ref, d1, [f = l.lhs](const Params& p) { return f(p.n()); }, l.scale);

    b.bicomplex("Eq2.42", "(2.42) BP_{-n} = (-1)^{n+1} BP_n + (-1)^n Q_n (i + 2j + 5ij)", range_n(0, 50),
                [](const Params& p) { return bp(-p.n()); });
    b.bicomplex("Eq2.43", "(2.43) BPL_{-n} = (-1)^n BPL_n + 8(-1)^{n+1} P_n (i + 2j + 5ij)", range_n(0, 50),
                [](const Params& p) { return bpl(-p.n()); });

    b.bicomplex("Eq2.44", "(2.44) Binet: BP_n = (alpha_hat alpha^n - beta_hat beta^n) / (alpha - beta)",
                range_n(0, 300), [](const Params& p) { return bp(p.n()); });
    b.bicomplex("Eq2.45", "(2.45) Binet: BPL_n = alpha_hat alpha^n + beta_hat beta^n", range_n(0, 300),
                [](const Params& p) { return bpl(p.n()); });

    b.bicomplex("Eq2.46", "(2.46) Cassini: BP_{n-1} BP_{n+1} - BP_n^2 = 12(-1)^n (j + ij)", range_n(1, 100),
                [](const Params& p) { return bp(p.n() - 1) * bp(p.n() + 1) - bp(p.n()) * bp(p.n()); });
    b.bicomplex("Eq2.47", "(2.47) Cassini: BPL_{n-1} BPL_{n+1} - BPL_n^2 = 8.12 (-1)^{n+1} (j + ij)", range_n(1, 100),
                [](const Params& p) { return bpl(p.n() - 1) * bpl(p.n() + 1) - bpl(p.n()) * bpl(p.n()); });

    b.bicomplex("Eq2.48", "(2.48) Catalan: BP_n^2 - BP_{n+r} BP_{n-r} = 12(-1)^{n-r} P_r^2 (j + ij)", catalan_domain(),
                [](const Params& p) { return bp(p.n()) * bp(p.n()) - bp(p.n() + p.r()) * bp(p.n() - p.r()); });
    b.bicomplex("Eq2.49", "(2.49) Catalan: BPL_n^2 - BPL_{n+r} BPL_{n-r} = 8.12 (-1)^{n-r} P_r^2 (j + ij)",
                catalan_domain(),
                [](const Params& p) { return bpl(p.n()) * bpl(p.n()) - bpl(p.n() + p.r()) * bpl(p.n() - p.r()); });
}

} // namespace

std::vector<IdentitySpec> register_all()
{
    Builder b;
    add_scalar_identities(b);
    add_bicomplex_identities(b);
    return b.finish();
}

} // namespace bcpell
