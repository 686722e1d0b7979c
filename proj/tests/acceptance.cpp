// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance            run every criterion
//   acceptance --list     print criterion keys
//   acceptance KEY...     run only the named criteria
//
// Exit status is 0 only if every criterion that ran passed.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "bcpell/bpell.hpp"
#include "bcpell/cli.hpp"
#include "bcpell/errata.hpp"
#include "bcpell/identities.hpp"
#include "oracles.hpp"

using namespace bcpell;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        else
            detail += "; " + why;
        pass = false;
    }
};

struct Criterion {
    std::string key;
    std::string title;
    std::function<Verdict()> run;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed3(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "bcpell");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> second_column(const std::string& text)
{
    std::vector<std::string> values;
    std::istringstream in(text);
    std::string idx, val;
    while (in >> idx >> val)
        values.push_back(val);
    return values;
}

std::vector<std::string> decimals(std::initializer_list<long long> xs)
{
    std::vector<std::string> out;
    for (auto x : xs)
        out.push_back(std::to_string(x));
    return out;
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s;
    for (const auto& x : xs)
        s += (s.empty() ? "" : ",") + x;
    return s;
}

BicomplexZ z(long long a, long long b, long long c, long long d) { return {a, b, c, d}; }

/// Runs the named registry entries over `domain` (or their defaults) and
/// records any FAILS with its first counterexample.
void require_holds(Verdict& v, const std::vector<std::string>& ids, const std::optional<Domain>& domain,
                   std::size_t& points)
{
    const auto specs = register_all();
    for (const auto& id : ids) {
        const auto* found = find_identity(specs, id);
        if (found == nullptr) {
            v.fail(id + " not registered");
            continue;
        }
        IdentitySpec spec = *found;
        if (domain)
            spec.domain = *domain;
        const auto out = verify(spec);
        points += out.checked_points;
        if (out.status == Status::fails) {
            const auto& cx = *out.first_counterexample;
            std::ostringstream os;
            os << id << " FAILS at " << cx.params << ", residual " << value_to_text(cx.residual);
            v.fail(os.str());
        }
    }
}

// ---------------------------------------------------------------------------

Verdict sequence_goldens()
{
    Verdict v;
    const auto t0 = Clock::now();
    const auto p = cli({"seq", "pell", "1", "10"});
    const auto q = cli({"seq", "pell-lucas", "1", "10"});
    const double took = seconds_since(t0);
    const auto want_p = decimals({1, 2, 5, 12, 29, 70, 169, 408, 985, 2378});
    const auto want_q = decimals({2, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726});
    if (p.code != 0 || second_column(p.out) != want_p)
        v.fail("pell 1..10 gave " + join(second_column(p.out)));
    if (q.code != 0 || second_column(q.out) != want_q)
        v.fail("pell-lucas 1..10 gave " + join(second_column(q.out)));
    if (took >= 1.0)
        v.fail("took " + fixed3(took) + ", limit 1 s");
    if (v.pass)
        v.detail = "both lists exact, " + fixed3(took);
    return v;
}

Verdict modified_pell_discrepancy()
{
    Verdict v;
    const auto r = cli({"seq", "modified", "1", "8"});
    const auto got = second_column(r.out);
    if (r.code != 0 || got != decimals({1, 3, 7, 17, 41, 99, 239, 577}))
        v.fail("seq modified 1 8 gave " + join(got));
    const auto e = cli({"errata"});
    if (e.out.find("listing: modified Pell numbers at position 7 prints 329, recurrence gives 239") ==
        std::string::npos)
        v.fail("errata does not report 329 at position 7");
    if (v.pass)
        v.detail = "recurrence gives 239; errata flags printed 329";
    return v;
}

Verdict binet_equivalence()
{
    Verdict v;
    const auto t0 = Clock::now();
    for (Index n = 0; n <= 300; ++n) {
        if (binet_bp(n) != bp(n))
            v.fail("binet_bp differs at n=" + std::to_string(n));
        if (binet_bpl(n) != bpl(n))
            v.fail("binet_bpl differs at n=" + std::to_string(n));
    }
    const double took = seconds_since(t0);
    if (took >= 2.0)
        v.fail("took " + fixed3(took) + ", limit 2 s");
    if (v.pass)
        v.detail = "n in [0, 300] exact, " + fixed3(took);
    return v;
}

Verdict listed_values()
{
    Verdict v;
    const std::pair<std::string, std::pair<BicomplexZ, BicomplexZ>> cases[] = {
        {"bp(0)", {bp(0), z(0, 1, 2, 5)}},   {"bp(1)", {bp(1), z(1, 2, 5, 12)}},
        {"bp(2)", {bp(2), z(2, 5, 12, 29)}}, {"bpl(0)", {bpl(0), z(2, 2, 6, 14)}},
        {"bpl(1)", {bpl(1), z(2, 6, 14, 34)}}, {"bpl(2)", {bpl(2), z(6, 14, 34, 82)}},
    };
    for (const auto& [label, pair] : cases)
        if (pair.first != pair.second)
            v.fail(label + " = " + value_to_text(pair.first));
    if (v.pass)
        v.detail = "six values exact";
    return v;
}

Verdict cassini()
{
    Verdict v;
    if (bc_mul(bp(0), bp(2)) != z(116, -116, -50, 32))
        v.fail("bp(0) bp(2) = " + value_to_text(bc_mul(bp(0), bp(2))));
    if (bc_mul(bp(1), bp(1)) != z(116, -116, -38, 44))
        v.fail("bp(1)^2 = " + value_to_text(bc_mul(bp(1), bp(1))));
    for (Index n = 1; n <= 100; ++n) {
        const BicomplexZ res =
            bc_mul(bp(n - 1), bp(n + 1)) - bc_mul(bp(n), bp(n)) - BigInt(12 * parity_sign(n)) * z(0, 0, 1, 1);
        if (res != BicomplexZ::zero())
            v.fail("nonzero residual at n=" + std::to_string(n) + ": " + value_to_text(res));
    }
    std::size_t points = 0;
    require_holds(v, {"Eq2.46"}, range_n(1, 100), points);
    if (v.pass)
        v.detail = "residual zero for n in [1, 100]; spot products match";
    return v;
}

Verdict docagne()
{
    Verdict v;
    const BicomplexZ spot = bc_mul(bp(2), bp(1)) - bc_mul(bp(3), bp(0));
    if (spot != z(0, 0, 24, 24))
        v.fail("m=2, n=0 difference " + value_to_text(spot));
    std::size_t points = 0;
    require_holds(v, {"Eq2.29"}, range_mn(0, 30), points);
    if (v.pass)
        v.detail = std::to_string(points) + " points on [0, 30]^2; spot (0, 0, 24, 24)";
    return v;
}

Verdict catalan()
{
    Verdict v;
    std::size_t points = 0;
    require_holds(v, {"Eq2.48", "Eq2.49"}, Domain({{'r', 1, 5, std::nullopt}, {'n', 0, 30, 'r'}}), points);
    if (v.pass)
        v.detail = std::to_string(points) + " points, r in [1, 5], n in [r, r+30]";
    return v;
}

Verdict nega()
{
    Verdict v;
    for (Index n = 0; n <= 50; ++n) {
        if (bp(-n) != nega_bp_rhs(n))
            v.fail("bp(-" + std::to_string(n) + ") differs");
        if (bpl(-n) != nega_bpl_rhs(n))
            v.fail("bpl(-" + std::to_string(n) + ") differs");
    }
    std::size_t points = 0;
    require_holds(v, {"Eq2.42", "Eq2.43"}, range_n(0, 50), points);
    if (v.pass)
        v.detail = "n in [0, 50] exact";
    return v;
}

Verdict linear_relations()
{
    Verdict v;
    std::vector<std::string> ids;
    for (int k = 30; k <= 41; ++k)
        ids.push_back("Eq2." + std::to_string(k));
    std::size_t points = 0;
    require_holds(v, ids, range_n(2, 60), points);
    if (v.pass)
        v.detail = "twelve relations, n in [2, 60]";
    return v;
}

Verdict algebra_properties()
{
    using B = Bicomplex<std::int64_t>;
    Verdict v;
    std::size_t bad_unary = 0;
    for (std::int64_t a = -20; a <= 20; ++a)
        for (std::int64_t b = -20; b <= 20; ++b)
            for (std::int64_t c = -20; c <= 20; ++c)
                for (std::int64_t d = -20; d <= 20; ++d) {
                    const B x{a, b, c, d};
                    const B pi = bc_mul(x, bc_conj(ConjugationKind::I, x));
                    const B pj = bc_mul(x, bc_conj(ConjugationKind::J, x));
                    const B pij = bc_mul(x, bc_conj(ConjugationKind::IJ, x));
                    bool ok = pi.i == 0 && pi.ij == 0 && pj.j == 0 && pj.ij == 0 && pij.i == 0 && pij.j == 0;
                    for (auto k : all_conjugation_kinds)
                        ok = ok && bc_conj(k, bc_conj(k, x)) == x;
                    if (!ok)
                        ++bad_unary;
                }
    if (bad_unary != 0)
        v.fail(std::to_string(bad_unary) + " grid points break involution or structural zeroes");

    oracle::Sampler s(0x5eed);
    std::size_t bad_binary = 0;
    constexpr int samples = 200000;
    for (int t = 0; t < samples; ++t) {
        const auto x = s.bicomplex<std::int64_t>(-20, 20);
        const auto y = s.bicomplex<std::int64_t>(-20, 20);
        const auto w = s.bicomplex<std::int64_t>(-20, 20);
        bool ok = bc_mul(x, y) == bc_mul(y, x) && bc_mul(bc_mul(x, y), w) == bc_mul(x, bc_mul(y, w)) &&
                  bc_mul(x, bc_add(y, w)) == bc_add(bc_mul(x, y), bc_mul(x, w)) &&
                  bc_mul(x, y) == oracle::table_product(x, y);
        for (auto k : all_conjugation_kinds)
            ok = ok && bc_conj(k, bc_mul(x, y)) == bc_mul(bc_conj(k, x), bc_conj(k, y)) &&
                 bc_conj(k, bc_add(x, y)) == bc_add(bc_conj(k, x), bc_conj(k, y));
        if (!ok)
            ++bad_binary;
    }
    if (bad_binary != 0)
        v.fail(std::to_string(bad_binary) + " sampled triples break a ring or conjugation law");

    if (bc_mul(z(1, 0, 0, 1), z(1, 0, 0, -1)) != BicomplexZ::zero())
        v.fail("(1,0,0,1)(1,0,0,-1) is not zero");
    if (v.pass)
        v.detail = "41^4 grid for unary laws, " + std::to_string(samples) + " seeded triples, zero divisor ok";
    return v;
}

Verdict scalar_identities()
{
    Verdict v;
    std::vector<std::string> ids;
    for (int k = 6; k <= 19; ++k)
        ids.push_back(k < 10 ? "Eq1.0" + std::to_string(k) : "Eq1." + std::to_string(k));
    std::size_t points = 0;
    require_holds(v, ids, std::nullopt, points);
    if (v.pass)
        v.detail = "14 identities HOLD, " + std::to_string(points) + " points";
    return v;
}

Verdict determinism()
{
    Verdict v;
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / ("bcpell_accept_p1_" + std::to_string(::getpid()) + ".json");
    const auto b = dir / ("bcpell_accept_p8_" + std::to_string(::getpid()) + ".json");
    const auto ra = cli({"check", "--all", "--parallel", "1", "--report", a.string()});
    const auto rb = cli({"check", "--all", "--parallel", "8", "--report", b.string()});
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };
    const std::string ta = slurp(a), tb = slurp(b);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    if (ra.code == exit_error || rb.code == exit_error)
        v.fail("check exited with an error");
    if (ta.empty())
        v.fail("empty report");
    if (ta != tb)
        v.fail("reports differ");
    if (v.pass)
        v.detail = "byte-identical reports, " + std::to_string(ta.size()) + " bytes";
    return v;
}

Verdict erratum_classification()
{
    Verdict v;
    const auto specs = register_all();
    const auto t0 = Clock::now();
    const auto report = run_all(specs, 8);
    const double took = seconds_since(t0);
    if (took >= 10.0)
        v.fail("check --all took " + fixed3(took) + ", limit 10 s");

    const std::vector<std::string> ids = {"Eq2.07",       "Eq2.17-stmt", "Eq2.17-proof", "Eq2.18-stmt",
                                          "Eq2.18-proof", "Eq2.22-stmt", "Eq2.22-proof", "Eq2.27-stmt",
                                          "Eq2.27-proof", "Eq2.28-stmt", "Eq2.28-proof"};
    std::string verdicts;
    for (const auto& id : ids) {
        const EvalOutcome* o = nullptr;
        for (const auto& x : report.outcomes)
            if (x.id == id)
                o = &x;
        const auto* spec = find_identity(specs, id);
        if (o == nullptr || spec == nullptr) {
            v.fail(id + " missing from the report");
            continue;
        }
        verdicts += (verdicts.empty() ? "" : " ") + id + "=" + to_string(o->status);

        // Brute force: evaluate both printed sides at every point, independently of verify().
        std::optional<Params> first_bad;
        spec->domain.for_each([&](const Params& p) {
            const Value lhs = spec->lhs(p);
            const Value rhs = spec->rhs(p);
            Value scaled = lhs;
            if (spec->scale != 1) {
                if (const auto* s = std::get_if<BigInt>(&lhs))
                    scaled = Value{BigInt(*s * spec->scale)};
                else
                    scaled = Value{BigInt(spec->scale) * std::get<BicomplexZ>(lhs)};
            }
            if (!is_zero(residual(scaled, rhs))) {
                first_bad = p;
                return false;
            }
            return true;
        });

        if (o->status == Status::holds) {
            if (first_bad || o->first_counterexample)
                v.fail(id + " reported HOLDS but brute force disagrees");
            continue;
        }
        if (!o->first_counterexample) {
            v.fail(id + " FAILS without a counterexample");
            continue;
        }
        const auto& cx = *o->first_counterexample;
        if (!first_bad || !(*first_bad == cx.params))
            v.fail(id + " counterexample is not the first brute-force failure");
        if (is_zero(cx.residual) || !(residual(cx.lhs, cx.rhs) == cx.residual))
            v.fail(id + " residual is not lhs - rhs");
        if (!(cx.rhs == spec->rhs(cx.params)))
            v.fail(id + " reported rhs does not re-evaluate");
    }
    if (v.pass)
        v.detail = verdicts + "; full run " + fixed3(took);
    return v;
}

const std::vector<Criterion>& criteria()
{
    static const std::vector<Criterion> all = {
        {"sequence-goldens", "Sequence goldens", sequence_goldens},
        {"modified-pell", "Modified-Pell discrepancy", modified_pell_discrepancy},
        {"binet", "Binet equivalence", binet_equivalence},
        {"listed-values", "Listed bicomplex values", listed_values},
        {"cassini", "Cassini", cassini},
        {"docagne", "d'Ocagne", docagne},
        {"catalan", "Catalan", catalan},
        {"nega", "Nega-identities", nega},
        {"linear-relations", "Linear relations", linear_relations},
        {"algebra", "Algebra property suite", algebra_properties},
        {"scalar-identities", "Scalar identity suite", scalar_identities},
        {"determinism", "Determinism", determinism},
        {"erratum-classification", "Erratum classification", erratum_classification},
    };
    return all;
}

} // namespace

int main(int argc, char** argv)
{
    std::vector<std::string> wanted(argv + 1, argv + argc);
    if (wanted.size() == 1 && wanted[0] == "--list") {
        for (const auto& c : criteria())
            std::cout << c.key << '\n';
        return 0;
    }
    for (const auto& w : wanted) {
        bool known = false;
        for (const auto& c : criteria())
            known = known || c.key == w;
        if (!known) {
            std::cerr << "unknown criterion '" << w << "'\n";
            return 2;
        }
    }

    std::size_t failed = 0, ran = 0;
    for (const auto& c : criteria()) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.key) == wanted.end())
            continue;
        ++ran;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        if (!v.pass)
            ++failed;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.title << ": " << v.detail << '\n';
    }
    std::cout << ran - failed << " of " << ran << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
