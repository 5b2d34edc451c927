#include "oracles.hpp"

#include <uhv/archive.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace uhv;

namespace
{
InsertResult put(EliteArchive &a, const ObjPoint &f)
{
    const Vector x{f[0], f[1]};
    return a.insert(x, f);
}

void expect_mutually_nondominated(const EliteArchive &a)
{
    const auto &e = a.entries();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = 0; j < e.size(); ++j)
            if (i != j) ASSERT_FALSE(oracle::dominates_or_equal(e[i].f, e[j].f));
}
} // namespace

TEST(Archive, Incomparable)
{
    EliteArchive a;
    EXPECT_EQ(put(a, {0, 1}), InsertResult::accepted);
    EXPECT_EQ(put(a, {1, 0}), InsertResult::accepted);
    EXPECT_EQ(a.size(), 2u);
}

TEST(Archive, DominationPurge)
{
    EliteArchive a;
    put(a, {1, 1});
    EXPECT_EQ(put(a, {0, 0}), InsertResult::dominated_replaced);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a.entries()[0].f, (ObjPoint{0, 0}));
    EXPECT_EQ(put(a, {0, 0}), InsertResult::rejected);
    EXPECT_EQ(put(a, {0.5, 0.5}), InsertResult::rejected);
}

TEST(Archive, OutsideReferenceRejected)
{
    EliteArchive a({11, 11});
    EXPECT_EQ(put(a, {11, 0}), InsertResult::rejected);
    EXPECT_EQ(put(a, {0, 12}), InsertResult::rejected);
    EXPECT_TRUE(a.empty());
}

TEST(Archive, OrderIndependentBeforeDiscretization)
{
    std::mt19937_64 g(5);
    auto pts = oracle::random_points(g, 300, 0.0, 11.0, 8);
    EliteArchive a, b;
    for (const auto &p : pts) put(a, p);
    std::shuffle(pts.begin(), pts.end(), g);
    for (const auto &p : pts) put(b, p);
    ASSERT_FALSE(a.discretized());
    EXPECT_EQ(a.objectives(), b.objectives());
    auto want = oracle::nondominated_inside(pts, a.ref());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(a.objectives(), want);
}

TEST(Archive, DominatedInsertLeavesArchive)
{
    EliteArchive a;
    put(a, {0, 2});
    put(a, {1, 1});
    put(a, {2, 0});
    auto before = a.objectives();
    EXPECT_EQ(put(a, {1.5, 1.5}), InsertResult::rejected);
    EXPECT_EQ(a.objectives(), before);
}

TEST(Archive, RandomInsertsStayNondominated)
{
    std::mt19937_64 g(6);
    EliteArchive a({11, 11}, 50);
    for (int i = 0; i < 2000; ++i) {
        put(a, oracle::random_points(g, 1, 0.0, 11.0)[0]);
        if (i % 100 == 0) expect_mutually_nondominated(a);
    }
    expect_mutually_nondominated(a);
}

TEST(Archive, ManyNondominatedBounded)
{
    std::mt19937_64 g(8);
    std::vector<ObjPoint> pts;
    for (int i = 0; i < 5000; ++i) {
        const double t = (i + 0.5) / 5000.0;
        pts.push_back({t * t, (1 - t) * (1 - t)});
    }
    std::shuffle(pts.begin(), pts.end(), g);
    EliteArchive a({11, 11}, 1000);
    for (const auto &p : pts) put(a, p);
    EXPECT_TRUE(a.discretized());
    EXPECT_LE(a.size(), 1100u);
    expect_mutually_nondominated(a);
}

TEST(Archive, LineFront)
{
    EliteArchive a({11, 11}, 1000);
    for (int i = 0; i <= 1000; ++i) put(a, {i / 1000.0, 1.0 - i / 1000.0});
    EXPECT_TRUE(a.discretized());
    EXPECT_LE(a.size(), 1000u);
}

TEST(Archive, SingleBoxKeepsOne)
{
    EliteArchive a({11, 11}, 3);
    // widths come from the ranges of the first four points; the cluster
    // near the origin ends up in one box
    put(a, {0, 10});
    put(a, {10, 0});
    put(a, {1e-9, 9.9999});
    put(a, {2e-9, 9.9998});
    ASSERT_TRUE(a.discretized());
    EXPECT_LE(a.size(), 3u);
    expect_mutually_nondominated(a);
}

TEST(Archive, PurgedEntryRejected)
{
    EliteArchive a({11, 11}, 1000);
    std::vector<ObjPoint> pts;
    for (int i = 0; i <= 1000; ++i) pts.push_back({i / 1000.0, 1.0 - i / 1000.0});
    for (const auto &p : pts) put(a, p);
    ASSERT_TRUE(a.discretized());
    const auto kept = a.objectives();
    std::size_t purged = 0;
    for (const auto &p : pts) {
        if (std::find(kept.begin(), kept.end(), p) != kept.end()) continue;
        ++purged;
        EXPECT_EQ(put(a, p), InsertResult::rejected);
    }
    EXPECT_GT(purged, 0u);
}
