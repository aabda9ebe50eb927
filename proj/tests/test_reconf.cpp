#include <liouville/killing.hpp>
#include <liouville/reconf.hpp>
#include <liouville/serialize.hpp>

#include "printers.hpp"

#include <gtest/gtest.h>

using namespace liouville;

TEST(ReconfTable, NThree) {
    const auto t = reconf_table(3, 8);
    EXPECT_EQ(t.h0_total, 10);
    EXPECT_EQ(t.rows.at(3).h1(), 0);
    EXPECT_EQ(t.rows.at(4).h1(), 5);
    for (int d = 5; d <= 8; ++d) {
        const Integer expect = weyl_dim(Weight{d - 1, 2, 0}) - dim_sym(3, d - 1);
        EXPECT_EQ(t.rows.at(std::size_t(d)).h1(), expect);
        EXPECT_GT(t.rows.at(std::size_t(d)).h1(), 0);
    }
}

TEST(ReconfTable, NFour) {
    const auto t = reconf_table(4, 6);
    EXPECT_EQ(t.rows.at(3).h1(), 10);
    EXPECT_EQ(t.rows.at(3).h1(), kernel_cokernel_dims(4, 2).coker);
    EXPECT_EQ(t.h0_total, 15);
}

TEST(ReconfTable, NoHigherCohomology) {
    for (int n = 3; n <= 6; ++n)
        for (const auto& row : reconf_table(n, 8).rows) EXPECT_LE(row.cohomology.top_degree(), 1);
}

TEST(ReconfTable, H0MatchesConformalKillingKernel) {
    for (int n = 3; n <= 5; ++n) {
        const auto t = reconf_table(n, 5);
        EXPECT_EQ(t.h0_total, expected_h0_total(n));
        for (int d = 0; d <= 4; ++d)
            EXPECT_EQ(t.rows.at(std::size_t(d)).h0(), Integer(static_cast<unsigned long>(ck_kernel(n, d).size())))
                << "n=" << n << " d=" << d;
    }
}

TEST(ReconfTable, ExactAndFormulaCokernelsAgree) {
    for (int n = 3; n <= 5; ++n) {
        const auto t = reconf_table(n, 7);
        for (const auto& row : t.rows) {
            if (row.d < 3) {
                EXPECT_FALSE(row.formula_coker);
                continue;
            }
            ASSERT_TRUE(row.formula_coker);
            EXPECT_EQ(row.h1(), *row.formula_coker);
            if (row.exact) {
                EXPECT_EQ(row.exact->coker, *row.formula_coker);
            }
        }
    }
    // Below the cap every row is exact; with a zero cap none is.
    ReconfOptions none;
    none.exact_work_cap = 0;
    for (const auto& row : reconf_table(4, 6, none).rows) EXPECT_FALSE(row.exact);
    for (const auto& row : reconf_table(4, 6).rows)
        if (row.d >= 3) {
            EXPECT_TRUE(row.exact);
        }
}

TEST(ReconfTable, H1StrictlyIncreasingForNAtLeastFour) {
    for (int n = 4; n <= 6; ++n) {
        const auto t = reconf_table(n, 12);
        for (int d = 4; d <= 12; ++d)
            EXPECT_GT(t.rows.at(std::size_t(d)).h1(), t.rows.at(std::size_t(d - 1)).h1()) << "n=" << n << " d=" << d;
    }
}

TEST(ReconfTable, DeterministicAcrossWorkerCounts) {
    ReconfOptions one, four;
    one.workers = 1;
    four.workers = 4;
    for (int n = 3; n <= 5; ++n) {
        const auto a = to_json(reconf_table(n, 9, one), Indexing::bundle).dump();
        const auto b = to_json(reconf_table(n, 9, four), Indexing::bundle).dump();
        EXPECT_EQ(a, b);
    }
}

TEST(ReconfTable, Rejects) {
    EXPECT_THROW(reconf_table(2, 5), Error);
    EXPECT_THROW(reconf_table(3, 2), Error);
}

TEST(Continuity, Report) {
    const auto rows = continuity_report(2, 5, 6);
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& x : rows[0].h0) EXPECT_EQ(x, 2);
    for (const auto& x : rows[0].h1) EXPECT_EQ(x, 0);
    EXPECT_EQ(rows[1].h0_total, 10);
    for (int d = 4; d <= 6; ++d) EXPECT_GT(rows[1].h1[std::size_t(d)], 0);
    const auto& n4 = rows[2].h1;
    const auto first = std::find_if(n4.begin(), n4.end(), [](const Integer& x) { return x != 0; });
    ASSERT_NE(first, n4.end());
    EXPECT_EQ(*first, 10);
    EXPECT_THROW(continuity_report(1, 3, 5), Error);
    EXPECT_THROW(continuity_report(2, 7, 5), Error);
}

TEST(Parallel, OrderAndErrors) {
    const auto v = parallel_map<int>(100, [](std::size_t i) { return int(i * i); }, 8);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], int(i * i));
    EXPECT_THROW(parallel_map<int>(
                     10, [](std::size_t i) -> int { if (i == 7) throw Error("test", "boom"); return 0; }, 4),
                 Error);
}
