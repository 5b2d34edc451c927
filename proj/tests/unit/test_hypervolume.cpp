#include "oracles.hpp"

#include <uhv/hypervolume.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace uhv;

namespace
{
const ObjPoint kR{11.0, 11.0};
}

TEST(Dominance, Basic)
{
    EXPECT_EQ(dominates({0, 0}, {1, 1}), Dominance::strict);
    EXPECT_EQ(dominates({0, 1}, {0, 1}), Dominance::weak);
    EXPECT_EQ(dominates({0, 1}, {1, 0}), Dominance::none);
    EXPECT_TRUE(strictly_dominates({0, 1}, {0, 2}));
    EXPECT_FALSE(strictly_dominates({0, 1}, {0, 1}));
}

TEST(Dominance, ApproximationSetMatchesOracle)
{
    std::mt19937_64 g(7);
    for (int rep = 0; rep < 50; ++rep) {
        auto pts = oracle::random_points(g, 50, 0.0, 12.0, 4);
        auto ids = approximation_set(pts, kR);
        std::vector<ObjPoint> got;
        for (auto i : ids) got.push_back(pts[i]);
        auto want = oracle::nondominated_inside(pts, kR);
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want);
    }
}

TEST(Hv2d, Examples)
{
    std::vector<ObjPoint> one{{0, 0}};
    std::vector<ObjPoint> two{{0, 1}, {1, 0}};
    std::vector<ObjPoint> three{{0, 1}, {1, 0}, {0.5, 0.5}};
    EXPECT_DOUBLE_EQ(hv2d(one, kR), 121.0);
    EXPECT_DOUBLE_EQ(hv2d(two, kR), 120.0);
    EXPECT_DOUBLE_EQ(hv2d(three, kR), 120.25);
    EXPECT_DOUBLE_EQ(oracle::hv_inclusion_exclusion(three, kR), 120.25);
    std::vector<ObjPoint> none;
    EXPECT_DOUBLE_EQ(hv2d(none, kR), 0.0);
    std::vector<ObjPoint> outside{{11, 0}, {12, -1}};
    EXPECT_DOUBLE_EQ(hv2d(outside, kR), 0.0);
}

TEST(Hv2d, RandomAgainstOracles)
{
    std::mt19937_64 g(11);
    for (int rep = 0; rep < 300; ++rep) {
        auto pts = oracle::random_points(g, 1 + rep % 12, -1.0, 12.0, rep % 3 == 0 ? 2 : 0);
        const double got = hv2d(pts, kR);
        EXPECT_NEAR(got, oracle::hv_grid(pts, kR), 1e-9);
        EXPECT_NEAR(got, oracle::hv_inclusion_exclusion(pts, kR), 1e-9);
    }
}

TEST(Hvi2d, Examples)
{
    std::vector<ObjPoint> two{{0, 1}, {1, 0}};
    ApproxBoundary b(two, kR);
    EXPECT_DOUBLE_EQ(hvi2d({0.5, 0.5}, b), 0.25);
    EXPECT_DOUBLE_EQ(hvi2d({2, 2}, b), 0.0);
    EXPECT_DOUBLE_EQ(hvi2d({0, 1}, b), 0.0);
    ApproxBoundary empty({}, kR);
    EXPECT_DOUBLE_EQ(hvi2d({-1, -1}, empty), 144.0);
}

TEST(Hvi2d, RandomAgainstDifference)
{
    std::mt19937_64 g(12);
    for (int rep = 0; rep < 300; ++rep) {
        auto pts = oracle::random_points(g, rep % 10, 0.0, 12.0, rep % 2 ? 4 : 0);
        auto x = oracle::random_points(g, 1, -1.0, 12.0, rep % 2 ? 4 : 0)[0];
        ApproxBoundary b(pts, kR);
        auto with = pts;
        with.push_back(x);
        EXPECT_NEAR(hvi2d(x, b), oracle::hv_grid(with, kR) - oracle::hv_grid(pts, kR), 1e-9);
    }
}

TEST(UncrowdedDistance, Examples)
{
    std::vector<ObjPoint> origin{{0, 0}};
    std::vector<ObjPoint> two{{0, 1}, {1, 0}};
    EXPECT_DOUBLE_EQ(uncrowded_distance({2, 3}, ApproxBoundary(origin, kR)), 2.0);
    EXPECT_DOUBLE_EQ(uncrowded_distance({2, 2}, ApproxBoundary(two, kR)), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(uncrowded_distance({0.5, 0.5}, ApproxBoundary(two, kR)), 0.0);
    EXPECT_DOUBLE_EQ(uncrowded_distance({0, 1}, ApproxBoundary(two, kR)), 0.0);
    EXPECT_DOUBLE_EQ(uncrowded_distance({14, 15}, ApproxBoundary({}, kR)), 5.0);
    EXPECT_NEAR(oracle::uncrowded_distance({2, 3}, origin, kR), 2.0, 1e-12);
    EXPECT_NEAR(oracle::uncrowded_distance({2, 2}, two, kR), std::sqrt(2.0), 1e-12);
}

TEST(UncrowdedDistance, RandomAgainstOracle)
{
    std::mt19937_64 g(13);
    for (int rep = 0; rep < 300; ++rep) {
        auto pts = oracle::random_points(g, rep % 10, 0.0, 12.0, rep % 2 ? 4 : 0);
        auto x = oracle::random_points(g, 1, -1.0, 14.0, rep % 2 ? 4 : 0)[0];
        EXPECT_NEAR(uncrowded_distance(x, ApproxBoundary(pts, kR)), oracle::uncrowded_distance(x, pts, kR), 1e-9);
    }
}

TEST(Uhvi, Examples)
{
    std::vector<ObjPoint> origin{{0, 0}};
    EXPECT_DOUBLE_EQ(uhvi({2, 3}, origin, kR), -2.0);
    std::vector<ObjPoint> two{{0, 1}, {1, 0}};
    EXPECT_DOUBLE_EQ(uhvi({0.5, 0.5}, two, kR), 0.25);
}

TEST(Uhv, Examples)
{
    std::vector<ObjPoint> two{{0, 1}, {1, 0}};
    EXPECT_DOUBLE_EQ(uhv::uhv(two, kR).uhv, 120.0);
    std::vector<ObjPoint> dom{{0, 0}, {2, 3}};
    auto v = uhv::uhv(dom, kR);
    EXPECT_DOUBLE_EQ(v.hv, 121.0);
    EXPECT_DOUBLE_EQ(v.uhv, 119.0);
    EXPECT_EQ(v.n_nondominated, 1u);
}

TEST(Uhv, RandomAgainstOracle)
{
    std::mt19937_64 g(14);
    for (int rep = 0; rep < 300; ++rep) {
        auto pts = oracle::random_points(g, 1 + rep % 12, -1.0, 14.0, rep % 2 ? 4 : 0);
        EXPECT_NEAR(uhv::uhv(pts, kR).uhv, oracle::uhv(pts, kR), 1e-9);
    }
}

TEST(Uhv, NondominatedSetsEqualHv)
{
    std::mt19937_64 g(15);
    for (int rep = 0; rep < 100; ++rep) {
        auto pts = oracle::random_front(g, 1 + rep % 20, kR);
        auto v = uhv::uhv(pts, kR);
        EXPECT_EQ(v.uhv, v.hv);
        EXPECT_EQ(v.penalty, 0.0);
    }
}

TEST(Ghss, Examples)
{
    std::vector<ObjPoint> pts{{0, 1}, {1, 0}, {0.2, 0.2}};
    auto s = ghss(pts, kR, 1);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], 2u);
    std::vector<ObjPoint> ties{{0, 1}, {1, 0}};
    EXPECT_EQ(ghss(ties, kR, 1)[0], 0u);
    auto all = ghss(pts, kR, 10);
    EXPECT_EQ(all.size(), 3u);
}

TEST(Ghss, RandomAgainstExhaustiveGreedy)
{
    std::mt19937_64 g(16);
    for (int rep = 0; rep < 200; ++rep) {
        auto pts = oracle::random_points(g, 8, 0.0, 11.5);
        auto got = ghss(pts, kR, 3);
        auto want = oracle::greedy_hss(pts, kR, 3);
        ASSERT_EQ(got.size(), want.size());
        // equal picks or picks of equal gain (dominated candidates tie at 0)
        std::vector<ObjPoint> a, b;
        for (auto i : got) a.push_back(pts[i]);
        for (auto i : want) b.push_back(pts[i]);
        EXPECT_NEAR(oracle::hv_grid(a, kR), oracle::hv_grid(b, kR), 1e-9);
        EXPECT_EQ(got[0], want[0]);
    }
}

TEST(ApproxBoundary, InsertKeepsFront)
{
    std::mt19937_64 g(17);
    auto pts = oracle::random_points(g, 200, 0.0, 12.0, 4);
    ApproxBoundary b({}, kR);
    std::vector<ObjPoint> seen;
    for (const auto &p : pts) {
        b.insert(p);
        seen.push_back(p);
    }
    auto want = oracle::nondominated_inside(seen, kR);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(b.front(), want);
}
