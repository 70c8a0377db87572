#include "sodlab/sodlab.hpp"

#include <doctest.h>

using namespace sodlab;

namespace {

long binom(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    long v = 1;
    for (long j = 1; j <= k; ++j)
        v = v * (n - k + j) / j;
    return v;
}

} // namespace

TEST_SUITE("apps") {

TEST_CASE("virtual dimensions")
{
    const VirtualDims a = virtual_dimensions(10, 1, 2, 1);
    CHECK(a.grass == 8);
    CHECK(a.dualGrass == 8);
    CHECK(a.incidence == 8);
    CHECK(a.printedIncidence == 8);
    const VirtualDims z = virtual_dimensions(7, 3, 0, 0);
    CHECK(z.grass == 7);
    CHECK(z.dualGrass == 7);
    CHECK(z.incidence == 7);
    for (long r = 0; r <= 4; ++r)
        for (long dp = 0; dp <= 4; ++dp) {
            const VirtualDims v = virtual_dimensions(20, r, dp, 0);
            CHECK(v.incidence == v.grass);
            // incidence as a rank-dp Grassmannian over the rank-dm dual one
            for (long dm = 0; dm <= 3; ++dm) {
                const VirtualDims w = virtual_dimensions(20, r, dp, dm);
                CHECK(w.incidence == w.dualGrass + dp * ((r + dm) - dp));
            }
        }
    const VirtualDims p = virtual_dimensions(10, 3, 2, 1);
    CHECK(p.incidence - p.printedIncidence == (3 - 1) * (2 - 1));
    CHECK_THROWS(virtual_dimensions(10, 1, -1, 0));
}

TEST_CASE("curves examples")
{
    const DecompositionTable g5 = curves_table(5, 5, 1);
    REQUIRE(g5.rows.size() == 2);
    CHECK(g5.rows[0].copies == 1);
    CHECK(g5.rows[0].target == "G^1_3(C)");
    CHECK(g5.rows[0].virtualDim == -1);
    CHECK(g5.rows[1].copies == 1);
    CHECK(g5.rows[1].target == "G^0_3(C)");
    CHECK(g5.rows[1].virtualDim == 3);
    CHECK(g5.sourceVirtualDim == 3);
    CHECK(g5.component_count() == 2);

    const DecompositionTable g7 = curves_table(7, 6, 1);
    REQUIRE(g7.rows.size() == 1);
    CHECK(g7.rows[0].copies == 1);
    CHECK(g7.rows[0].target == "G^1_6(C)");
    CHECK(g7.rows[0].virtualDim == 3);

    const DecompositionTable g1 = curves_table(1, 1, 0);
    REQUIRE(g1.rows.size() == 2);
    CHECK(g1.rows[0].target == "G^0_-1(C)");
    CHECK(g1.component_count() == 2);

    CHECK_THROWS(curves_table(5, 3, 1));
    CHECK_THROWS(curves_table(0, 1, 1));
}

TEST_CASE("curves sweep")
{
    for (int g = 1; g <= 6; ++g)
        for (int d = g - 1; d <= 2 * g; ++d)
            for (int r = -1; r <= 3; ++r) {
                CAPTURE(g);
                CAPTURE(d);
                CAPTURE(r);
                const DecompositionTable t = curves_table(g, d, r);
                const long e = 1 - g + d;
                long expected = 0;
                for (long i = 0; i <= std::min<long>(e, r + 1); ++i)
                    expected += binom(e, i);
                CHECK(t.component_count() == expected);
                if (r + 1 >= e)
                    CHECK(t.component_count() == (1L << e));
                CHECK(t.sourceVirtualDim == brill_noether(g, d, r));
                CHECK(brill_noether(g, d, r) == g - (r + 1) * (g - d + r));
                for (std::size_t i = 0; i < t.rows.size(); ++i) {
                    const long ri = r - static_cast<long>(i);
                    CHECK(t.rows[i].copies == binom(e, static_cast<long>(i)));
                    CHECK(t.rows[i].virtualDim == brill_noether(g, 2 * g - 2 - d, ri));
                }
            }
}

TEST_CASE("blowup and reducible tables")
{
    CHECK(blowup_table(1).component_count() == 2);
    const DecompositionTable b2 = blowup_table(2);
    CHECK(b2.component_count() == 4);
    CHECK(b2.rows.size() == 3);
    CHECK(blowup_table(3).component_count() == 8);
    for (int r = 1; r <= 8; ++r) {
        CHECK(blowup_table(r).component_count() == (1L << r));
        CHECK(reducible_table(r).component_count() == r + 1);
    }
    const DecompositionTable red = reducible_table(4);
    CHECK(red.component_count() == 5);
    REQUIRE(!red.rows.empty());
    CHECK(red.rows.front().indexRange.front() == -4);
    CHECK(red.rows.back().indexRange.back() == 0);
    CHECK_THROWS(blowup_table(0));
    CHECK_THROWS(reducible_table(0));
}

} // TEST_SUITE
