#include <liouville/cech.hpp>
#include <liouville/rational.hpp>

#include "printers.hpp"

#include <gtest/gtest.h>

using namespace liouville;

namespace {

std::vector<std::size_t> unit(int n, int p) {
    std::vector<std::size_t> v(static_cast<std::size_t>(n), 0);
    v[std::size_t(p)] = 1;
    return v;
}

} // namespace

TEST(CechSlice, Examples) {
    EXPECT_EQ(cech_slice(2, {-1, -1}).cohomology_dims, unit(2, 1));
    EXPECT_EQ(cech_slice(3, {0, 0, 0}).cohomology_dims, unit(3, 0));
    EXPECT_EQ(cech_slice(2, {-1, 0}).cohomology_dims, (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(cech_slice(1, {-4}).cohomology_dims, unit(1, 0));
}

TEST(CechSlice, CochainsCountAdmissibleSubsets) {
    // z^m lives on U_I iff every negative coordinate lies in I.
    for (int n = 1; n <= 5; ++n)
        for (int neg = 0; neg <= n; ++neg) {
            MultiDegree m(static_cast<std::size_t>(n), 1);
            for (int i = 0; i < neg; ++i) m[std::size_t(i)] = -1;
            const auto s = cech_slice(n, m);
            long chi_c = 0, chi_h = 0;
            for (int p = 0; p < n; ++p) {
                EXPECT_EQ(Integer(static_cast<unsigned long>(s.cochain_dims[std::size_t(p)])),
                          p + 1 >= neg ? binomial(n - neg, p + 1 - neg) : Integer(0));
                const long sign = p % 2 ? -1 : 1;
                chi_c += sign * long(s.cochain_dims[std::size_t(p)]);
                chi_h += sign * long(s.cohomology_dims[std::size_t(p)]);
            }
            EXPECT_EQ(chi_c, chi_h);
        }
}

TEST(CechSlice, ExhaustiveAgainstClosedForm) {
    for (int n = 1; n <= 4; ++n) {
        MultiDegree m(static_cast<std::size_t>(n), -3);
        while (true) {
            const auto s = cech_slice(n, m);
            EXPECT_EQ(s.cohomology_dims, cech_closed_form(n, m));
            bool nonneg = true, allneg = true;
            for (int x : m) {
                nonneg = nonneg && x >= 0;
                allneg = allneg && x < 0;
            }
            EXPECT_EQ(s.cohomology_dims[0], nonneg || (n == 1 && allneg) ? 1u : 0u);
            if (n > 1) {
                EXPECT_EQ(s.cohomology_dims[std::size_t(n - 1)], allneg ? 1u : 0u);
            }
            std::size_t i = 0;
            while (i < m.size() && m[i] == 3) m[i++] = -3;
            if (i == m.size()) break;
            ++m[i];
        }
    }
}

TEST(CechTable, Examples) {
    const auto t1 = punctured_affine_table(1, 3);
    EXPECT_EQ(t1.totals, (std::vector<std::size_t>{7}));
    EXPECT_EQ(t1.slices, 7u);

    const auto t3 = punctured_affine_table(3, 2);
    EXPECT_EQ(t3.totals[2], 8u);
    EXPECT_EQ(t3.totals[1], 0u);
    EXPECT_EQ(t3.totals[0], 27u);
    EXPECT_EQ(t3.slices, 125u);

    for (int box = 0; box <= 3; ++box) {
        const auto t = punctured_affine_table(2, box);
        for (const auto& row : t.rows) {
            const bool nonneg = row.m[0] >= 0 && row.m[1] >= 0;
            EXPECT_EQ(row.cohomology_dims[0], nonneg ? 1u : 0u);
        }
        EXPECT_EQ(t.totals[0], std::size_t((box + 1) * (box + 1)));
        EXPECT_EQ(t.totals[1], std::size_t(box * box));
    }
}

TEST(CechTable, TotalDegreeBuckets) {
    const auto t = punctured_affine_table(2, 2);
    EXPECT_EQ(t.by_degree.at(-2), (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(t.by_degree.at(0), (std::vector<std::size_t>{1, 0}));
    EXPECT_EQ(t.by_degree.at(4), (std::vector<std::size_t>{1, 0}));
}

TEST(CechTable, Rejects) {
    EXPECT_THROW(punctured_affine_table(0, 1), Error);
    EXPECT_THROW(punctured_affine_table(2, -1), Error);
}
