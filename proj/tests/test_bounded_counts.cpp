#include <gtest/gtest.h>

#include <cstdlib>

#include "kostka/bounded_counts.hpp"
#include "kostka/errors.hpp"
#include "kostka/oracles.hpp"

using namespace kostka;

namespace {

// Every bound vector with length <= 4 and entries <= 4.
template <class Visit>
void for_each_bounds(Visit&& visit) {
    std::vector<int> x;
    auto rec = [&](auto&& self) -> void {
        visit(BoundVector(x));
        if (x.size() == 4)
            return;
        for (int v = 0; v <= 4; ++v) {
            x.push_back(v);
            self(self);
            x.pop_back();
        }
    };
    rec(rec);
}

} // namespace

TEST(SCount, EmptyVector) {
    EXPECT_EQ(s_count(BoundVector{}, 0), 1);
    EXPECT_EQ(s_count(BoundVector{}, 1), 0);
}

TEST(SCount, KnownValues) {
    const BoundVector x{2, 1};
    EXPECT_EQ(x.total(), 3);
    EXPECT_EQ(s_count(x, 1), 2);
    EXPECT_EQ(s_count(x, 2), 2);
    EXPECT_EQ(s_count(x, 2), s_count(x, 3 - 2));
}

TEST(SCount, OutOfRangeIsZero) {
    EXPECT_EQ(s_count(BoundVector{2, 1}, -1), 0);
    EXPECT_EQ(s_count(BoundVector{2, 1}, 4), 0);
    EXPECT_EQ(s_count(BoundVector{0, 0}, 0), 1);
}

TEST(SCount, LargeBoundsUseArbitraryPrecision) {
    // 40 bounds of 1: middle coefficient C(40, 20)
    const BoundVector x(std::vector<int>(40, 1));
    EXPECT_EQ(s_count(x, 20), Count("137846528820"));
    // 70 bounds of 1: C(70,35) exceeds 64 bits
    const BoundVector y(std::vector<int>(70, 1));
    EXPECT_EQ(s_count(y, 35), Count("112186277816662845432"));
}

TEST(SCount, NegativeBoundRejected) { EXPECT_THROW(BoundVector({1, -1}), PreconditionError); }

TEST(SSplit, KnownValues) {
    auto s = s_split(BoundVector{2, 1}, 1);
    EXPECT_EQ(s.top, 0);
    EXPECT_EQ(s.rest, 2);
    s = s_split(BoundVector{1}, 1);
    EXPECT_EQ(s.top, 1);
    EXPECT_EQ(s.rest, 0);
    s = s_split(BoundVector{2, 1}, 3);
    EXPECT_EQ(s.top, 1);
    EXPECT_EQ(s.rest, 0);
}

TEST(SSplit, UndefinedCases) {
    EXPECT_THROW(s_split(BoundVector{}, 0), PreconditionError);
    EXPECT_THROW(s_split(BoundVector{0, 3}, 1), PreconditionError);
}

TEST(SCount, AgreesWithBruteForce) {
    for_each_bounds([](const BoundVector& x) {
        for (long a = -1; a <= x.total() + 1; ++a)
            EXPECT_EQ(s_count(x, a), oracle::bounded_solutions(x, a));
    });
}

TEST(SCount, SymmetryAndNormalization) {
    for_each_bounds([](const BoundVector& x) {
        const int m = x.total();
        Count sum = 0, product = 1;
        for (long a = -1; a <= m + 1; ++a) {
            EXPECT_EQ(s_count(x, a), s_count(x, m - a));
            if (a >= 0 && a <= m)
                sum += s_count(x, a);
        }
        for (int b : x.bounds())
            product *= b + 1;
        EXPECT_EQ(sum, product);
    });
}

TEST(SCount, CloserToMiddleNeverCountsLess) {
    for_each_bounds([](const BoundVector& x) {
        const long m = x.total();
        for (long a = -1; a <= m + 1; ++a)
            for (long b = -1; b <= m + 1; ++b)
                if (std::labs(2 * a - m) >= std::labs(2 * b - m))
                    EXPECT_LE(s_count(x, a), s_count(x, b));
    });
}

TEST(SSplit, PartsSumToWhole) {
    for_each_bounds([](const BoundVector& x) {
        if (x.length() == 0 || x.bounds()[0] == 0)
            return;
        for (long a = -1; a <= x.total() + 1; ++a) {
            const auto s = s_split(x, a);
            EXPECT_EQ(s.top + s.rest, s_count(x, a));
        }
    });
}
