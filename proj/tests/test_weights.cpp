#include <liouville/poly.hpp>
#include <liouville/weights.hpp>
#include <liouville/young_symmetrizer.hpp>

#include "printers.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace liouville;

namespace {

// All dominant nonnegative weights of length n with at most `boxes` boxes.
void for_each_diagram(std::size_t n, int boxes, const std::function<void(const Weight&)>& fn) {
    std::vector<int> a(n, 0);
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int cap, int left) {
        if (i == n) {
            fn(Weight(a));
            return;
        }
        for (int v = 0; v <= std::min(cap, left); ++v) {
            a[i] = v;
            rec(i + 1, v, left - v);
        }
        a[i] = 0;
    };
    rec(0, boxes, boxes);
}

} // namespace

TEST(WeylDim, Examples) {
    EXPECT_EQ(weyl_dim(Weight{2, 0, 0}), 6);
    EXPECT_EQ(weyl_dim(Weight{1, 1, 0, 0}), 6);
    EXPECT_EQ(weyl_dim(Weight{2, 2, 0}), 6);
}

TEST(WeylDim, SymmetricAndExteriorPowers) {
    for (std::size_t n = 1; n <= 7; ++n) {
        for (int d = 0; d <= 12; ++d) EXPECT_EQ(weyl_dim(Weight::padded({d}, n)), binomial(long(n) + d - 1, d));
        for (std::size_t p = 0; p <= n; ++p) EXPECT_EQ(weyl_dim(Weight::column(p, n)), binomial(long(n), long(p)));
    }
}

TEST(WeylDim, InvariantUnderDualAndDeterminantShift) {
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_diagram(n, 6, [&](const Weight& l) {
            EXPECT_EQ(weyl_dim(dualize(l)), weyl_dim(l)) << l.str();
            std::vector<int> shifted = l.entries();
            for (auto& x : shifted) x -= 3;
            EXPECT_EQ(weyl_dim(Weight(shifted)), weyl_dim(l)) << l.str();
        });
}

TEST(WeylDim, RejectsNonDominant) {
    EXPECT_THROW(weyl_dim(Weight{0, 1}), Error);
    EXPECT_THROW(weyl_dim(Weight{1, 2, 0}), Error);
}

TEST(WeylDim, MatchesYoungSymmetrizerRank) {
    for (int n = 1; n <= kMaxOracleN; ++n)
        for_each_diagram(static_cast<std::size_t>(n), kMaxOracleBoxes, [&](const Weight& l) {
            if (l.boxes() == 0) return;
            const YoungSymmetrizer c(l, n);
            EXPECT_EQ(Integer(static_cast<unsigned long>(c.matrix().rank())), weyl_dim(l)) << l.str() << " n=" << n;
        });
}

TEST(Dualize, Examples) {
    EXPECT_EQ(dualize(Weight{1, 0, 0}), (Weight{0, 0, -1}));
    EXPECT_EQ(dualize(Weight{0, 0, 0, 0}), (Weight{0, 0, 0, 0}));
    EXPECT_EQ(dualize(Weight{2, 2}), (Weight{-2, -2}));
    EXPECT_EQ(dualize(dualize(Weight{3, 1, -2})), (Weight{3, 1, -2}));
}

TEST(Pieri, Examples) {
    for (int d = 0; d <= 6; ++d) {
        const auto two = pieri_sym(Weight::padded({d}, 4), 2);
        IsotypicSum expect2;
        expect2.add(Weight::padded({d + 2}, 4));
        if (d >= 1) expect2.add(Weight::padded({d + 1, 1}, 4));
        if (d >= 2) expect2.add(Weight::padded({d, 2}, 4));
        EXPECT_EQ(two, expect2) << "d=" << d;

        const auto one = pieri_sym(Weight::padded({d}, 4), 1);
        IsotypicSum expect1;
        expect1.add(Weight::padded({d + 1}, 4));
        if (d >= 1) expect1.add(Weight::padded({d, 1}, 4));
        EXPECT_EQ(one, expect1) << "d=" << d;
    }
    IsotypicSum three;
    three.add(Weight{3, 0, 0});
    EXPECT_EQ(pieri_sym(Weight{0, 0, 0}, 3), three);
}

TEST(Pieri, DimensionIdentity) {
    for (std::size_t n = 1; n <= 5; ++n)
        for_each_diagram(n, 8, [&](const Weight& l) {
            for (int k = 1; k <= 3; ++k) {
                const auto sum = pieri_sym(l, k);
                EXPECT_EQ(dim(sum), weyl_dim(l) * weyl_dim(Weight::padded({k}, n))) << l.str() << " k=" << k;
                for (const auto& [mu, m] : sum.terms()) {
                    EXPECT_EQ(m, 1);
                    EXPECT_EQ(mu.boxes(), l.boxes() + k);
                }
            }
        });
}

TEST(Pieri, Rejects) {
    EXPECT_THROW(pieri_sym(Weight{1, -1}, 1), Error);
    EXPECT_THROW(pieri_sym(Weight{1, 0}, 0), Error);
}

TEST(IsotypicSum, RejectsBadTerms) {
    IsotypicSum s;
    EXPECT_THROW(s.add(Weight{0, 1}), Error);
    EXPECT_THROW(s.add(Weight{1, 0}, 0), Error);
    s.add(Weight{1, 0}, 2);
    s.add(Weight{1, 0});
    EXPECT_EQ(s.multiplicity(Weight{1, 0}), 3);
    EXPECT_EQ(dim(s), 6);
}
