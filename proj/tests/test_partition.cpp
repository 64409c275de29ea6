#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "kostka/errors.hpp"
#include "kostka/oracles.hpp"
#include "kostka/partition.hpp"
#include "kostka/text_format.hpp"

using namespace kostka;

namespace {

std::vector<Partition> all_partitions_upto(int n) {
    std::vector<Partition> out;
    for (int m = 0; m <= n; ++m)
        for (auto& p : partitions_of(m))
            out.push_back(std::move(p));
    return out;
}

std::vector<Partition> cover_targets(const Partition& mu) {
    std::vector<Partition> out;
    for (const auto& c : covers(mu))
        out.push_back(c.nu);
    return out;
}

} // namespace

TEST(Partition, RejectsIncreasingOrInteriorZero) {
    EXPECT_THROW(Partition({1, 2}), PreconditionError);
    EXPECT_THROW(Partition({2, 0, 1}), PreconditionError);
    EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
    EXPECT_EQ(Partition({3, 1}).size(), 4);
}

TEST(Composition, EqualityIgnoresTrailingZeros) {
    EXPECT_EQ(Composition({1, 2, 0}), Composition({1, 2}));
    EXPECT_NE(Composition({1, 0, 2}), Composition({1, 2}));
    EXPECT_EQ(Composition({1, 2, 0}).hash(), Composition({1, 2}).hash());
    EXPECT_EQ(Composition({0, 0}), Composition());
    EXPECT_THROW(Composition({1, -1}), PreconditionError);
}

TEST(Dominance, KnownValues) {
    EXPECT_TRUE(dominates(Partition{2, 2}, Partition{2, 1, 1}));
    EXPECT_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    EXPECT_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST(Dominance, SizeMismatchThrows) {
    EXPECT_THROW(dominates(Partition{3}, Partition{2}), SizeMismatchError);
    EXPECT_THROW(dominates(Composition{1, 2}, Composition{4}), SizeMismatchError);
}

TEST(Dominance, CompositionsCompareByPrefixSums) {
    EXPECT_TRUE(dominates(Composition{2, 1, 0}, Composition{1, 2, 0}));
    EXPECT_FALSE(dominates(Composition{1, 2}, Composition{2, 1}));
    EXPECT_TRUE(dominates(Composition{1, 1, 1}, Composition{0, 1, 2}));
}

TEST(Dominance, IsAPartialOrderUpTo8) {
    for (int n = 0; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& a : ps) {
            EXPECT_TRUE(dominates(a, a));
            for (const auto& b : ps) {
                if (dominates(a, b) && dominates(b, a))
                    EXPECT_EQ(a, b);
                for (const auto& c : ps)
                    if (dominates(a, b) && dominates(b, c))
                        EXPECT_TRUE(dominates(a, c));
            }
        }
    }
}

TEST(Dominance, ConjugationReversesIt) {
    for (int n = 0; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps)
                EXPECT_EQ(dominates(a, b), dominates(conjugate(b), conjugate(a))) << a << " " << b;
    }
}

TEST(PartitionsOf, SmallCases) {
    ASSERT_EQ(partitions_of(0).size(), 1u);
    EXPECT_TRUE(partitions_of(0)[0].empty());
    const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(partitions_of(4), four);
    EXPECT_EQ(partitions_of(10).size(), 42u);
    EXPECT_THROW(partitions_of(-1), PreconditionError);
}

TEST(PartitionsOf, ReverseLexAndDistinct) {
    for (int n = 1; n <= 12; ++n) {
        const auto ps = partitions_of(n);
        EXPECT_TRUE(std::is_sorted(ps.rbegin(), ps.rend())) << n;
        EXPECT_EQ(std::set<Partition>(ps.begin(), ps.end()).size(), ps.size());
        for (const auto& p : ps)
            EXPECT_EQ(p.size(), n);
    }
}

TEST(CompositionsOf, CountsMatchStarsAndBars) {
    EXPECT_EQ(compositions_of(0, 3).size(), 1u);
    EXPECT_EQ(compositions_of(2, 2).size(), 3u); // (2), (1,1), (0,2)
    EXPECT_EQ(compositions_of(3, 1).size(), 1u);
    // positive compositions of 5: 2^4
    std::size_t positive = 0;
    for (const auto& c : compositions_of(5, 5))
        positive += std::none_of(c.parts().begin(), c.parts().end(), [](int v) { return v == 0; });
    EXPECT_EQ(positive, 16u);
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(Partition{2, 2}), (Partition{2, 2}));
    for (const auto& p : all_partitions_upto(9))
        EXPECT_EQ(conjugate(conjugate(p)), p);
}

TEST(Covers, KnownValues) {
    const auto c31 = covers(Partition{3, 1});
    ASSERT_EQ(c31.size(), 1u);
    EXPECT_EQ(c31[0].nu, (Partition{2, 2}));
    EXPECT_EQ(c31[0].move, (CoverMove{CoverMove::Kind::AdjacentRow, 1, 2}));

    const auto c21 = covers(Partition{2, 1});
    ASSERT_EQ(c21.size(), 1u);
    EXPECT_EQ(c21[0].nu, (Partition{1, 1, 1}));
    EXPECT_EQ(c21[0].move, (CoverMove{CoverMove::Kind::AdjacentColumn, 1, 3}));

    for (int n = 2; n <= 8; ++n) {
        const auto c = covers(Partition{n});
        ASSERT_EQ(c.size(), 1u);
        EXPECT_EQ(c[0].nu, (Partition{n - 1, 1}));
    }
    EXPECT_TRUE(covers(Partition{1}).empty());
    EXPECT_TRUE(covers(Partition{}).empty());
}

TEST(Covers, OverlapReportedOnceAsRowMove) {
    // (3,1): moving row 1 -> row 2 satisfies both readings
    const auto c = covers(Partition{3, 1});
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].move.kind, CoverMove::Kind::AdjacentRow);
}

TEST(Covers, MatchBruteForceHasseUpTo10) {
    for (const auto& mu : all_partitions_upto(10))
        EXPECT_EQ(cover_targets(mu), oracle::hasse_covers(mu)) << mu;
}

TEST(Covers, EachCoverIsSaturated) {
    for (int n = 0; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& mu : ps) {
            for (const auto& c : covers(mu)) {
                EXPECT_TRUE(dominates(mu, c.nu));
                EXPECT_NE(mu, c.nu);
                EXPECT_EQ(apply_move(mu, c.move), c.nu);
                for (const auto& xi : ps) {
                    const bool between = !(xi == mu) && !(xi == c.nu) && dominates(mu, xi) && dominates(xi, c.nu);
                    EXPECT_FALSE(between) << mu << " > " << xi << " > " << c.nu;
                }
            }
        }
    }
}

TEST(ApplyMove, RejectsNonPartitionResult) {
    EXPECT_THROW(apply_move(Partition{2, 1}, {CoverMove::Kind::AdjacentRow, 1, 2}), PreconditionError);
    EXPECT_THROW(apply_move(Partition{2, 1}, {CoverMove::Kind::AdjacentRow, 2, 1}), PreconditionError);
}

TEST(CoverChain, KnownValues) {
    EXPECT_EQ(cover_chain(Partition{3, 1}, Partition{3, 1}), (std::vector<Partition>{{3, 1}}));

    const auto full = cover_chain(Partition{4}, Partition{1, 1, 1, 1});
    const std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(full, expected);
    EXPECT_EQ(static_cast<int>(full.size()) - 1, oracle::hasse_distance(Partition{4}, Partition{1, 1, 1, 1}));

    const std::vector<Partition> short_chain{{3, 1}, {2, 2}, {2, 1, 1}};
    EXPECT_EQ(cover_chain(Partition{3, 1}, Partition{2, 1, 1}), short_chain);
}

TEST(CoverChain, Errors) {
    EXPECT_THROW(cover_chain(Partition{3}, Partition{2}), SizeMismatchError);
    EXPECT_THROW(cover_chain(Partition{3, 3}, Partition{4, 1, 1}), NotComparableError);
    EXPECT_THROW(cover_chain(Partition{2, 1, 1}, Partition{3, 1}), NotComparableError);
}

TEST(CoverChain, EveryStepIsACoverUpTo8) {
    for (int n = 0; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& mu : ps) {
            for (const auto& nu : ps) {
                if (!dominates(mu, nu))
                    continue;
                const auto chain = cover_chain(mu, nu);
                ASSERT_FALSE(chain.empty());
                EXPECT_EQ(chain.front(), mu);
                EXPECT_EQ(chain.back(), nu);
                EXPECT_EQ(chain.size() == 1, mu == nu);
                for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
                    const auto next = cover_targets(chain[s]);
                    EXPECT_NE(std::find(next.begin(), next.end(), chain[s + 1]), next.end());
                }
            }
        }
    }
}

TEST(AdjacentTransferChain, KnownValues) {
    const CoverMove col13{CoverMove::Kind::AdjacentColumn, 1, 3};
    EXPECT_EQ(adjacent_transfer_chain(Partition{3, 2, 1}, col13), (std::vector<Composition>{{2, 3, 1}}));
    const auto small = adjacent_transfer_chain(Partition{2, 1}, col13);
    ASSERT_EQ(small.size(), 1u);
    EXPECT_EQ(small[0], (Composition{1, 2, 0}));
    EXPECT_EQ(std::vector<int>(small[0].parts().begin(), small[0].parts().end()), (std::vector<int>{1, 2, 0}));

    EXPECT_TRUE(is_adjacent_transfer(Composition{3, 2, 1}, Composition{2, 3, 1}));
    EXPECT_TRUE(is_adjacent_transfer(Composition{2, 3, 1}, Composition{2, 2, 2}));
    EXPECT_TRUE(is_adjacent_transfer(Composition{2, 1}, Composition{1, 2, 0}));
    EXPECT_TRUE(is_adjacent_transfer(Composition{1, 2, 0}, Composition{1, 1, 1}));
}

TEST(AdjacentTransferChain, Errors) {
    EXPECT_THROW(adjacent_transfer_chain(Partition{3, 1}, {CoverMove::Kind::AdjacentRow, 1, 2}), PreconditionError);
    EXPECT_THROW(adjacent_transfer_chain(Partition{3, 1}, {CoverMove::Kind::AdjacentColumn, 1, 3}), PreconditionError);
}

TEST(AdjacentTransferChain, AllColumnCoversUpTo10) {
    for (const auto& mu : all_partitions_upto(10)) {
        for (const auto& c : covers(mu)) {
            if (c.move.kind != CoverMove::Kind::AdjacentColumn)
                continue;
            auto mid = adjacent_transfer_chain(mu, c.move);
            EXPECT_EQ(mid.size(), static_cast<std::size_t>(c.move.j - c.move.i - 1));
            if (c.move.j == c.move.i + 2)
                EXPECT_EQ(mid.size(), 1u);
            std::vector<Composition> full{mu.as_composition()};
            full.insert(full.end(), mid.begin(), mid.end());
            full.push_back(c.nu.as_composition());
            for (std::size_t s = 0; s + 1 < full.size(); ++s)
                EXPECT_TRUE(is_adjacent_transfer(full[s], full[s + 1])) << full[s] << " -> " << full[s + 1];
        }
    }
}

TEST(TextFormat, ParseAndRender) {
    EXPECT_EQ(parse_partition("3,1"), (Partition{3, 1}));
    EXPECT_EQ(parse_partition(""), Partition{});
    EXPECT_EQ(parse_partition("0"), Partition{});
    EXPECT_EQ(parse_partition(" 2, 2 ,1"), (Partition{2, 2, 1}));
    EXPECT_EQ(to_text(Partition{3, 1}), "3,1");
    EXPECT_EQ(to_text(Partition{}), "");
    EXPECT_EQ(to_text(Composition{1, 2, 0}), "1,2,0");
    EXPECT_EQ(parse_composition("1,0,2"), (Composition{1, 0, 2}));
}

TEST(TextFormat, ErrorsNameTheArgument) {
    try {
        parse_partition("1,2", "--mu");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.argument(), "--mu");
    }
    EXPECT_THROW(parse_partition("3,x"), ParseError);
    EXPECT_THROW(parse_partition("3,,1"), ParseError);
    EXPECT_THROW(parse_composition("1,-2"), ParseError);
    EXPECT_THROW(parse_partition("2,0,1"), ParseError);
}
