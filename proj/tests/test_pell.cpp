#include <doctest.h>

#include <thread>
#include <vector>

#include "bcpell/pell.hpp"
#include "oracles.hpp"

using namespace bcpell;

TEST_CASE("seeds")
{
    CHECK(seeds(SequenceKind::pell).first == 1);
    CHECK(seeds(SequenceKind::pell).second == 2);
    CHECK(seeds(SequenceKind::pell_lucas).first == 2);
    CHECK(seeds(SequenceKind::pell_lucas).second == 6);
    CHECK(seeds(SequenceKind::modified_pell).first == 1);
    CHECK(seeds(SequenceKind::modified_pell).second == 3);
}

TEST_CASE("published terms")
{
    const long long p[] = {1, 2, 5, 12, 29, 70, 169, 408, 985, 2378};
    const long long q[] = {2, 6, 14, 34, 82, 198, 478, 1154, 2786, 6726};
    for (Index n = 1; n <= 10; ++n) {
        CHECK(pell(n) == p[n - 1]);
        CHECK(pell_lucas(n) == q[n - 1]);
    }
    CHECK(seq(SequenceKind::pell, 7) == 169);
    CHECK(seq(SequenceKind::pell_lucas, 5) == 82);
}

TEST_CASE("index zero, negative indices, modified Pell")
{
    CHECK(pell(0) == 0);
    CHECK(pell_lucas(0) == 2);
    CHECK(modified_pell(0) == 1);
    CHECK(pell(-1) == 1);
    CHECK(pell(-2) == -2);
    CHECK(pell(-3) == 5);
    CHECK(pell_lucas(-1) == -2);
    const long long q[] = {1, 3, 7, 17, 41, 99, 239, 577};
    for (Index n = 1; n <= 8; ++n)
        CHECK(modified_pell(n) == q[n - 1]);
    CHECK(seq(SequenceKind::modified_pell, 7) == 239);
}

TEST_CASE("large frozen values")
{
    CHECK(pell(100) == BigInt("66992092050551637663438906713182313772"));
    CHECK(pell_lucas(100) == BigInt("189482250299273866835746159841800035874"));
    CHECK(pell(300) == BigInt("2405252129711623484710495558522357173667400588427864372185101521045397503910768684922934668936725"
                              "440491728003546500"));
}

TEST_CASE("agrees with a plain loop on [-120, 300]")
{
    for (Index n = -120; n <= 300; ++n) {
        CHECK(pell(n) == oracle::pell(n));
        CHECK(pell_lucas(n) == oracle::pell_lucas(n));
        CHECK(modified_pell(n) == oracle::modified_pell(n));
    }
}

TEST_CASE("binet scalar forms")
{
    CHECK(binet_pell(0) == 0);
    CHECK(binet_pell(5) == 29);
    CHECK(binet_pell(7) == 169);
    CHECK(binet_pell_lucas(0) == 2);
    CHECK(binet_pell_lucas(2) == 6);
    CHECK(binet_pell_lucas(5) == 82);
    for (Index n = 0; n <= 300; ++n) {
        CHECK(binet_pell(n) == pell(n));
        CHECK(binet_pell_lucas(n) == pell_lucas(n));
    }
    CHECK_THROWS_AS(binet_pell(-1), std::invalid_argument);
    CHECK_THROWS_AS(binet_pell_lucas(-1), std::invalid_argument);
}

TEST_CASE("scalar relations")
{
    for (Index n = -50; n <= 50; ++n) {
        CHECK(pell_lucas(n) == 2 * modified_pell(n));
        CHECK(pell(n + 1) + pell(n - 1) == pell_lucas(n));
    }
    for (Index n = 0; n <= 50; ++n) {
        CHECK(pell(n) * pell_lucas(n) == pell(2 * n));
        CHECK(pell(-n) == parity_sign(n + 1) * pell(n));
        CHECK(pell_lucas(-n) == parity_sign(n) * pell_lucas(n));
    }
}

TEST_CASE("names")
{
    for (auto k : {SequenceKind::pell, SequenceKind::pell_lucas, SequenceKind::modified_pell})
        CHECK(parse_sequence_kind(to_string(k)) == k);
    CHECK(to_string(SequenceKind::modified_pell) == "modified");
    CHECK_THROWS_AS(parse_sequence_kind("fibonacci"), std::invalid_argument);
}

TEST_CASE("concurrent access returns the same values")
{
    std::vector<std::vector<BigInt>> seen(8);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < seen.size(); ++t) {
            pool.emplace_back([t, &seen] {
                // Interleave directions and kinds so the threads race on extension.
                for (Index k = 0; k <= 400; ++k) {
                    const Index n = (t % 2 == 0) ? 400 - k : -k;
                    seen[t].push_back(seq(static_cast<SequenceKind>(t % 3), n));
                }
            });
        }
    }
    std::size_t bad = 0;
    for (std::size_t t = 0; t < seen.size(); ++t) {
        for (Index k = 0; k <= 400; ++k) {
            const Index n = (t % 2 == 0) ? 400 - k : -k;
            const auto kind = static_cast<SequenceKind>(t % 3);
            const BigInt expect = kind == SequenceKind::pell         ? oracle::pell(n)
                                  : kind == SequenceKind::pell_lucas ? oracle::pell_lucas(n)
                                                                     : oracle::modified_pell(n);
            if (seen[t][static_cast<std::size_t>(k)] != expect)
                ++bad;
        }
    }
    CHECK(bad == 0);
}
