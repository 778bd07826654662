#include <gtest/gtest.h>

#include "faqai/errors.hpp"
#include "faqai/multiset.hpp"
#include "faqai/weighted_set.hpp"
#include "support/support.hpp"

using namespace faqai;

namespace {

using E = Multiset::Entry;
using W = WeightedSet::Entry;

Multiset ms(std::vector<E> entries) { return Multiset::from_entries(std::move(entries)); }

WeightedSet ws(const Semiring &base, std::vector<W> entries) { return WeightedSet::from_entries(base, std::move(entries)); }

}

TEST(Multiset, CanonicalForm)
{
    auto a = ms({{3, 1}, {1, 2}, {3, 4}, {2, 0}});
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a.entries()[0], (E{1, 2}));
    EXPECT_EQ(a.entries()[1], (E{3, 5}));
    EXPECT_EQ(a.total(), 7u);
    EXPECT_EQ(a, ms({{1, 1}, {3, 5}, {1, 1}}));
}

TEST(Multiset, Union)
{
    EXPECT_EQ(ms_union(ms({{1, 2}, {3, 1}}), ms({{1, 1}})), ms({{1, 3}, {3, 1}}));
    auto a = ms({{1, 2}, {4, 1}});
    EXPECT_EQ(ms_union(a, Multiset()), a);
    EXPECT_EQ(ms_union(ms({{5, 1}}), ms({{5, 1}})), ms({{5, 2}}));
}

TEST(Multiset, Convolve)
{
    EXPECT_EQ(ms_convolve(ms({{1, 1}, {2, 1}}), ms({{10, 1}})), ms({{11, 1}, {12, 1}}));
    auto a = ms({{1, 2}, {-4, 3}});
    EXPECT_EQ(ms_convolve(a, Multiset::unit()), a);
    EXPECT_EQ(ms_convolve(ms({{1, 2}}), ms({{1, 3}})), ms({{2, 6}}));
    EXPECT_EQ(ms_convolve(a, Multiset()), Multiset());
}

TEST(Multiset, Triangle)
{
    auto a = ms({{1, 1}, {2, 1}, {4, 2}});
    EXPECT_EQ(ms_triangle(a, 3), 2u);
    EXPECT_EQ(ms_triangle(a, kInf), a.total());
    EXPECT_EQ(ms_triangle(a, 0.5), 0u);
    EXPECT_EQ(ms_triangle(Multiset(), 10), 0u);
}

TEST(Multiset, ConvolutionOverflowIsDetected)
{
    const Count big = Count(1) << 100;
    EXPECT_THROW(ms_convolve(ms({{0, big}}), ms({{0, big}})), OverflowError);
}

TEST(Multiset, SemiringLawsOnRandomTriples)
{
    testkit::Rng rng(21);
    for (int i = 0; i < 1000; ++i) {
        auto a = testkit::random_multiset(rng, 6, 8, 5);
        auto b = testkit::random_multiset(rng, 6, 8, 5);
        auto c = testkit::random_multiset(rng, 6, 8, 5);
        auto failed = testkit::law_violations(a, b, c, ms_union, ms_convolve, Multiset(), Multiset::unit());
        ASSERT_TRUE(failed.empty()) << failed.front() << " on " << to_debug_string(a);
    }
}

TEST(Multiset, TotalsAndTriangleAreHomomorphic)
{
    testkit::Rng rng(22);
    for (int i = 0; i < 500; ++i) {
        auto a = testkit::random_multiset(rng, 10, 20, 100);
        auto b = testkit::random_multiset(rng, 10, 20, 100);
        EXPECT_EQ(ms_convolve(a, b).total(), a.total() * b.total());
        auto u = ms_union(a, b);
        EXPECT_EQ(u.total(), a.total() + b.total());
        for (int t = -21; t <= 21; ++t)
            EXPECT_EQ(ms_triangle(u, t), ms_triangle(a, t) + ms_triangle(b, t));
    }
}

TEST(WeightedSet, Union)
{
    auto mp = min_plus_semiring();
    EXPECT_EQ(ws_plus(ws(mp, {{1, 2}}), ws(mp, {{1, 3}})), ws(mp, {{1, 2}}));
    auto a = ws(mp, {{1, 2}, {3, 0}});
    EXPECT_EQ(ws_plus(a, WeightedSet(mp)), a);
    auto c = counting_semiring();
    EXPECT_EQ(ws_plus(ws(c, {{1, 2}}), ws(c, {{2, 5}})), ws(c, {{1, 2}, {2, 5}}));
    EXPECT_THROW(ws_plus(a, WeightedSet(c)), std::invalid_argument);
}

TEST(WeightedSet, Convolve)
{
    auto mp = min_plus_semiring();
    EXPECT_EQ(ws_convolve(ws(mp, {{1, 2}}), ws(mp, {{2, 3}})), ws(mp, {{3, 5}}));
    auto a = ws(mp, {{1, 2}, {-3, 7}});
    EXPECT_EQ(ws_convolve(a, WeightedSet::unit(mp)), a);
    auto x = ws(mp, {{0, 1}, {1, 1}});
    EXPECT_EQ(ws_convolve(x, x), ws(mp, {{0, 2}, {1, 2}, {2, 2}}));
}

TEST(WeightedSet, ZeroWeightsAreDropped)
{
    auto c = counting_semiring();
    EXPECT_TRUE(ws(c, {{1, 0}}).empty());
    EXPECT_TRUE(ws(c, {{1, 2}, {1, -2}}).empty());
    EXPECT_TRUE(ws(min_plus_semiring(), {{1, kInf}}).empty());
}

TEST(WeightedSet, Triangle)
{
    auto mp = min_plus_semiring();
    auto a = ws(mp, {{1, 5}, {2, 3}});
    EXPECT_EQ(ws_triangle(a, 2), 3);
    EXPECT_EQ(ws_triangle(a, 0), kInf);
    EXPECT_EQ(ws_triangle(ws(counting_semiring(), {{1, 2}, {2, 5}}), 1.5), 2);
}

TEST(WeightedSet, Lift)
{
    auto mp = min_plus_semiring();
    EXPECT_EQ(lift(2.5, 7, mp), ws(mp, {{2.5, 7}}));
    EXPECT_TRUE(lift(2.5, kInf, mp).empty());
    auto c = counting_semiring();
    EXPECT_EQ(lift(0, 1, c), WeightedSet::unit(c));
}

TEST(WeightedSet, SemiringLawsOnRandomTriples)
{
    testkit::Rng rng(23);
    for (const Semiring &base : {min_plus_semiring(), max_plus_semiring()})
        for (int i = 0; i < 1000; ++i) {
            auto a = testkit::random_weighted_set(rng, base, 5, 6);
            auto b = testkit::random_weighted_set(rng, base, 5, 6);
            auto c = testkit::random_weighted_set(rng, base, 5, 6);
            auto failed = testkit::law_violations(a, b, c, ws_plus, ws_convolve, WeightedSet(base),
                                                  WeightedSet::unit(base));
            ASSERT_TRUE(failed.empty()) << base.name << ": " << failed.front();
        }
}

TEST(WeightedSet, TriangleOfUnionIsPlusOfTriangles)
{
    testkit::Rng rng(24);
    for (const Semiring &base : {min_plus_semiring(), max_plus_semiring(), counting_semiring()})
        for (int i = 0; i < 300; ++i) {
            auto a = testkit::random_weighted_set(rng, base, 8, 10);
            auto b = testkit::random_weighted_set(rng, base, 8, 10);
            auto u = ws_plus(a, b);
            for (int e = -11; e <= 11; ++e)
                EXPECT_EQ(ws_triangle(u, e), base.plus(ws_triangle(a, e), ws_triangle(b, e)));
        }
}
