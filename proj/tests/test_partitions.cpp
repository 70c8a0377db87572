#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace sodlab;

namespace {

/* every weakly decreasing tuple in [0,w]^h, ascending lexicographic */
std::vector<std::vector<int>> brute_box(int h, int w)
{
    std::vector<std::vector<int>> out;
    if (h < 0 || w < 0)
        return out;
    std::vector<int> cur(static_cast<std::size_t>(h), 0);
    std::function<void(int)> rec = [&](int k) {
        if (k == h) {
            out.push_back(cur);
            return;
        }
        const int cap = k == 0 ? w : cur[static_cast<std::size_t>(k - 1)];
        for (int v = 0; v <= cap; ++v) {
            cur[static_cast<std::size_t>(k)] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

std::set<std::pair<int, int>> cells(const Partition& p)
{
    std::set<std::pair<int, int>> s;
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p[r]; ++c)
            s.emplace(r, c);
    return s;
}

} // namespace

TEST_SUITE("partitions") {

TEST_CASE("partition normalisation and parsing")
{
    CHECK(Partition({2, 1, 0, 0}).parts() == std::vector<int>{2, 1});
    CHECK(Partition{}.str() == "(0)");
    CHECK(Partition::parse_csv("0").is_zero());
    CHECK(Partition::parse_csv("(3,1)") == Partition{3, 1});
    CHECK(Partition{3, 1}.csv() == "3,1");
    CHECK(Partition{}.csv() == "0");
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition{4, 2, 1}.size() == 7);
    CHECK(Partition{4, 2}[5] == 0);
}

TEST_CASE("box examples")
{
    auto b22 = box_enumerate(Box{2, 2});
    CHECK(b22.size() == 6);
    CHECK(b22 == std::vector<Partition>{{}, {1}, {1, 1}, {2}, {2, 1}, {2, 2}});
    CHECK(box_enumerate(Box{3, 0}) == std::vector<Partition>{Partition{}});
    CHECK(box_enumerate(Box{-1, 2}).empty());
    CHECK(Box{-1, 2}.cardinality() == 0);
    CHECK(Box{2, 2}.contains(Partition{2, 1}));
    CHECK_FALSE(Box{2, 2}.contains(Partition{1, 1, 1}));
}

TEST_CASE("box enumeration matches brute force")
{
    for (int h = 0; h <= 8; ++h)
        for (int w = 0; w <= 8; ++w) {
            auto got = box_enumerate(Box{h, w});
            auto want = brute_box(h, w);
            REQUIRE(got.size() == want.size());
            CHECK(got.size() == binomial(h + w, h));
            CHECK(Box{h, w}.cardinality() == binomial(h + w, h));
            for (std::size_t k = 0; k < got.size(); ++k)
                CHECK(got[k].padded(h) == want[k]);
        }
}

TEST_CASE("partitions_of")
{
    CHECK(partitions_of(4) == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions_of(4, 2) == std::vector<Partition>{{4}, {3, 1}, {2, 2}});
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int k = 0; k <= 8; ++k)
        CHECK(partitions_of(k).size() == counts[static_cast<std::size_t>(k)]);
}

TEST_CASE("transpose")
{
    CHECK(transpose(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(transpose(Partition{2, 2}) == Partition{2, 2});
    CHECK(transpose(Partition{}) == Partition{});
    for (const Partition& p : box_enumerate(Box{6, 6})) {
        const Partition t = transpose(p);
        CHECK(transpose(t) == p);
        std::set<std::pair<int, int>> flipped;
        for (auto [r, c] : cells(p))
            flipped.emplace(c, r);
        CHECK(cells(t) == flipped);
    }
}

TEST_CASE("shift")
{
    CHECK(shift(Partition{1}, 1, 2) == Partition{2, 1});
    CHECK(shift(Partition{2}, 1, 2) == Partition{3, 1});
    CHECK(shift(Partition{}, 2, 3) == Partition{2, 2, 2});
    CHECK_THROWS(shift(Partition{1, 1, 1}, 1, 2));
}

TEST_CASE("lambda superscript")
{
    CHECK(lambda_superscript(Partition{2, 1}, 1, 2) == Partition{2, 1, 1});
    CHECK(lambda_superscript(Partition{2, 1}, 2, 2) == Partition{2, 2, 2});
    CHECK(lambda_superscript(Partition{1}, 1, 2) == Partition{1, 1, 1});
    CHECK_THROWS(lambda_superscript(Partition{2, 1}, 3, 2));
    CHECK_THROWS(lambda_superscript(Partition{2, 1}, 0, 2));
    for (int h = 1; h <= 4; ++h)
        for (int w = 1; w <= 4; ++w)
            for (const Partition& lam : box_enumerate(Box{h, w}))
                for (int i = 1; i <= lam.first(); ++i) {
                    const Partition s = lambda_superscript(lam, i, h);
                    CHECK(Box{h + 1, lam.first()}.contains(s));
                    CHECK_FALSE(Box{h, lam.first()}.contains(s));
                }
}

TEST_CASE("interleaves")
{
    CHECK(interleaves(Partition{2}, Partition{3, 1}, 2));
    CHECK(interleaves(Partition{1}, Partition{3, 1}, 2));
    CHECK_FALSE(interleaves(Partition{4}, Partition{3, 1}, 2));
    CHECK_FALSE(interleaves(Partition{}, Partition{3, 1}, 2));
    for (int h = 1; h <= 4; ++h)
        for (const Partition& lam : box_enumerate(Box{h, 4})) {
            std::uint64_t expected = 1;
            for (int k = 0; k + 1 < h; ++k)
                expected *= static_cast<std::uint64_t>(lam[k] - lam[k + 1] + 1);
            std::uint64_t count = 0;
            for (const Partition& nu : box_enumerate(Box{h - 1, 4}))
                if (interleaves(nu, lam, h))
                    ++count;
            CHECK(count == expected);
        }
}

TEST_CASE("induction blocks examples")
{
    // n-d=2, k=2, d-r=1
    const InductionBlocks a = induction_blocks(4, 2, 2, 1);
    CHECK(a.ok());
    REQUIRE(a.blocks.size() == 2);
    CHECK(a.blocks[0].kind == InductionBlock::Kind::Psi);
    CHECK(a.blocks[0].members == std::vector<Partition>{{}, {1}, {2}});
    CHECK(a.blocks[1].kind == InductionBlock::Kind::DetTwist);
    CHECK(a.blocks[1].twist == 1);
    CHECK(a.blocks[1].members == std::vector<Partition>{{1, 1}, {2, 1}, {2, 2}});

    // n-d=1, k=1, d=r
    const InductionBlocks b = induction_blocks(2, 1, 1, 1);
    CHECK(b.ok());
    REQUIRE(b.blocks.size() == 2);
    CHECK(b.blocks[0].members == std::vector<Partition>{Partition{}});
    CHECK(b.blocks[1].members == std::vector<Partition>{{1}});

    // k=0: a single block holding the zero partition
    const InductionBlocks c0 = induction_blocks(3, 1, 0, 1);
    CHECK(c0.ok());
    REQUIRE(c0.blocks.size() == 1);
    CHECK(c0.blocks[0].kind == InductionBlock::Kind::DetTwist);
    CHECK(c0.blocks[0].members == std::vector<Partition>{Partition{}});

    const InductionBlocks c1 = induction_blocks(3, 1, 0, 3);
    CHECK(c1.ok());
    REQUIRE(c1.blocks.size() == 1);
    CHECK(c1.blocks[0].members == std::vector<Partition>{Partition{}});

    // k below d-r leaves the det block with a negative twist
    CHECK_FALSE(induction_blocks(4, 3, 0, 1).ok());
}

TEST_CASE("induction blocks partition the target box")
{
    for (int n = 1; n <= 7; ++n)
        for (int d = 0; d <= n; ++d)
            for (int r = 0; r <= n; ++r)
                for (int k = std::max(0, d - r); k <= d; ++k) {
                    const InductionBlocks ib = induction_blocks(n, d, k, r);
                    CAPTURE(n);
                    CAPTURE(d);
                    CAPTURE(k);
                    CAPTURE(r);
                    CHECK(ib.disjoint);
                    CHECK(ib.covering);
                    CHECK(ib.problems.empty());
                    std::set<Partition> seen;
                    for (const auto& b : ib.blocks)
                        for (const Partition& p : b.members) {
                            CHECK(Box{n - d, k}.contains(p));
                            seen.insert(p);
                        }
                    CHECK(seen.size() == Box{n - d, k}.cardinality());
                }
}

} // TEST_SUITE
