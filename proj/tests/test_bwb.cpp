#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace sodlab;

namespace {

std::vector<IntegerWeight> cube(int n, int lo, int hi)
{
    std::vector<IntegerWeight> out;
    std::vector<int> cur(static_cast<std::size_t>(n), lo);
    while (true) {
        out.emplace_back(cur);
        int k = n - 1;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == hi)
            cur[static_cast<std::size_t>(k--)] = lo;
        if (k < 0)
            break;
        ++cur[static_cast<std::size_t>(k)];
    }
    return out;
}

/* Minimal inversion count over every permutation sorting lambda+rho strictly
 * decreasing; nullopt when none exists. */
std::optional<std::pair<IntegerWeight, int>> brute_straighten(const IntegerWeight& lambda)
{
    const int n = lambda.rank();
    std::vector<int> mu(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        mu[static_cast<std::size_t>(k)] = lambda[k] + (n - 1 - k);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::pair<IntegerWeight, int>> best;
    do {
        bool strict = true;
        for (int k = 0; k + 1 < n; ++k)
            if (mu[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] <=
                mu[static_cast<std::size_t>(perm[static_cast<std::size_t>(k + 1)])])
                strict = false;
        if (!strict)
            continue;
        const int inv = oracle::inversions(perm);
        if (best && best->second <= inv)
            continue;
        std::vector<int> dom(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            dom[static_cast<std::size_t>(k)] = mu[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] - (n - 1 - k);
        best = std::make_pair(IntegerWeight(dom), inv);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

TEST_SUITE("bwb") {

TEST_CASE("straighten examples")
{
    CHECK(straighten(IntegerWeight{2, 1, 0}) == BottOutcome::nonvanishing(IntegerWeight{2, 1, 0}, 0));
    CHECK(straighten(IntegerWeight{0, 1}).vanishing);
    CHECK(straighten(IntegerWeight{0, 2}) == BottOutcome::nonvanishing(IntegerWeight{1, 1}, 1));
    CHECK(straighten(IntegerWeight{0, 2}).str() == "NonVanishing dominant=(1,1) shift=1");
    CHECK(straighten(IntegerWeight{0, 1}).str() == "Vanishing");
    CHECK(straighten(IntegerWeight{}) == BottOutcome::nonvanishing(IntegerWeight{}, 0));
}

TEST_CASE("grassmannian pushforward examples")
{
    CHECK(grassmannian_pushforward(IntegerWeight{1}, IntegerWeight{0, 0}) ==
          BottOutcome::nonvanishing(IntegerWeight{1, 0, 0}, 0));
    CHECK(grassmannian_pushforward(IntegerWeight{0}, IntegerWeight{1, 1}).vanishing);
    CHECK(grassmannian_pushforward(IntegerWeight{0, 0}, IntegerWeight{3}) ==
          BottOutcome::nonvanishing(IntegerWeight{1, 1, 1}, 2));
    CHECK_THROWS_AS(grassmannian_pushforward(IntegerWeight{0, 1}, IntegerWeight{0}), std::invalid_argument);
    CHECK_THROWS_AS(grassmannian_pushforward(IntegerWeight{1}, IntegerWeight{0, 1}), std::invalid_argument);
}

TEST_CASE("alternant oracle examples")
{
    const LaurentCharacter x1 = LaurentCharacter::variable(2, 0), x2 = LaurentCharacter::variable(2, 1);
    CHECK(alternant_oracle(IntegerWeight{1, 0}) == x1 + x2);
    CHECK(alternant_oracle(IntegerWeight{0, 1}).is_zero());
    CHECK(alternant_oracle(IntegerWeight{0, 2}) == -(x1 * x2));
}

TEST_CASE("oracle equivalence on small ranks")
{
    for (int n = 1; n <= 3; ++n)
        for (const IntegerWeight& w : cube(n, -4, 4)) {
            CAPTURE(w.str());
            const BottOutcome b = straighten(w);
            CHECK(bott_euler_character(b, n) == alternant_oracle(w));
        }
}

TEST_CASE("straighten is minimal and idempotent")
{
    for (int n = 1; n <= 4; ++n)
        for (const IntegerWeight& w : cube(n, -3, 3)) {
            CAPTURE(w.str());
            const BottOutcome b = straighten(w);
            const auto brute = brute_straighten(w);
            REQUIRE(b.vanishing == !brute.has_value());
            if (b.vanishing)
                continue;
            CHECK(b.dominant == brute->first);
            CHECK(b.shift == brute->second);
            CHECK(b.dominant.is_dominant());
            CHECK(b.shift <= n * (n - 1) / 2);
            CHECK(straighten(b.dominant) == BottOutcome::nonvanishing(b.dominant, 0));
        }
}

TEST_CASE("serre window")
{
    CHECK(serre_window(2, 1).vanishing);
    CHECK(serre_window(2, 0) == BottOutcome::nonvanishing(IntegerWeight{0, 0, 0}, 0));
    CHECK(serre_window(2, 3) == BottOutcome::nonvanishing(IntegerWeight{1, 1, 1}, 2));
    for (int N = 1; N <= 6; ++N)
        for (int t = -3; t <= N + 3; ++t) {
            CAPTURE(N);
            CAPTURE(t);
            CHECK(serre_window(N, t).vanishing == (t >= 1 && t <= N));
        }
}

TEST_CASE("weyl dimension")
{
    CHECK(weyl_dimension(IntegerWeight{1, 0, 0}) == 3);
    CHECK(weyl_dimension(IntegerWeight{2, 1, 0}) == 8);
    CHECK(weyl_dimension(IntegerWeight{-1, -1}) == 1);
    CHECK_THROWS(weyl_dimension(IntegerWeight{0, 1}));
    for (const Partition& p : oracle::partitions_up_to(5, 3)) {
        BigInt terms = 0;
        const LaurentCharacter ch = oracle::ssyt_schur(p, 3);
        for (const auto& [e, c] : ch.terms())
            terms += c;
        CHECK(weyl_dimension(IntegerWeight::from_partition(p, 3)) == terms);
    }
}

} // TEST_SUITE
