#include "oracles.hpp"

#include <uhv/archive.hpp>
#include <uhv/problems.hpp>
#include <uhv/rng.hpp>
#include <uhv/trace.hpp>
#include <uhv/uhv_gomea.hpp>

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace uhv;

TEST(BuildFos, Marginal)
{
    std::vector<ObjPoint> means(9, ObjPoint{0, 0});
    auto f = build_fos(Linkage::marginal, 9, 10, means, 0.35, 31);
    ASSERT_EQ(f.size(), 9u);
    for (std::size_t k = 0; k < 9; ++k) {
        ASSERT_EQ(f.subsets[k].size(), 10u);
        for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(f.subsets[k][i], k * 10 + i);
        EXPECT_FALSE(f.skip[k]);
    }
}

TEST(BuildFos, Full)
{
    std::vector<ObjPoint> means(3, ObjPoint{0, 0});
    auto f = build_fos(Linkage::full, 3, 2, means, 0.35, 100);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f.subsets[0], (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
}

TEST(BuildFos, TreeFirstMerge)
{
    std::vector<ObjPoint> means{{0, 1}, {0.1, 0.9}, {1, 0}};
    auto f = build_fos(Linkage::tree, 3, 2, means, 0.35, 100);
    ASSERT_EQ(f.size(), 5u);
    EXPECT_EQ(f.subsets[3], (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(f.subsets[4].size(), 6u);
    for (auto s : f.skip) EXPECT_FALSE(s);
}

TEST(BuildFos, TreeSkipsLargeMerges)
{
    std::vector<ObjPoint> means{{0, 1}, {0.1, 0.9}, {1, 0}};
    // tau * N - 1 = 9.85: merges of 2 x 10 and 3 x 10 indices are skipped
    auto f = build_fos(Linkage::tree, 3, 10, means, 0.35, 31);
    ASSERT_EQ(f.size(), 5u);
    EXPECT_FALSE(f.skip[0]);
    EXPECT_TRUE(f.skip[3]);
    EXPECT_TRUE(f.skip[4]);
}

TEST(Assignment, AlignedIsIdentity)
{
    std::vector<ObjPoint> pts{{0, 1}, {0.5, 0.5}, {1, 0}};
    auto perm = greedy_assignment(pts, pts);
    EXPECT_EQ(perm, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Assignment, RandomAgainstBruteForce)
{
    std::mt19937_64 g(21);
    for (int rep = 0; rep < 200; ++rep) {
        auto sols = oracle::random_points(g, 5, 0.0, 1.0);
        auto means = oracle::random_points(g, 5, 0.0, 1.0);
        std::vector<std::size_t> want(5);
        std::vector<char> s_used(5, 0), m_used(5, 0);
        for (int step = 0; step < 5; ++step) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t bs = 0, bm = 0;
            for (std::size_t s = 0; s < 5; ++s)
                for (std::size_t m = 0; m < 5; ++m) {
                    if (s_used[s] || m_used[m]) continue;
                    const double d = std::hypot(sols[s][0] - means[m][0], sols[s][1] - means[m][1]);
                    if (d < best) {
                        best = d;
                        bs = s;
                        bm = m;
                    }
                }
            s_used[bs] = m_used[bm] = 1;
            want[bm] = bs;
        }
        EXPECT_EQ(greedy_assignment(sols, means), want);
    }
}

TEST(Assignment, ApplyPermutation)
{
    Vector phi{0, 0, 1, 1, 2, 2};
    std::vector<ObjPoint> objs{{0, 0}, {1, 1}, {2, 2}};
    std::vector<std::size_t> perm{2, 0, 1};
    apply_permutation(phi, objs, perm, 2);
    EXPECT_EQ(phi, (Vector{2, 2, 0, 0, 1, 1}));
    EXPECT_EQ(objs[0], (ObjPoint{2, 2}));
}

TEST(SlotMeans, Average)
{
    std::vector<std::vector<ObjPoint>> objs{{{0, 2}, {2, 0}}, {{2, 4}, {4, 2}}};
    auto m = slot_means(objs);
    EXPECT_EQ(m[0], (ObjPoint{1, 3}));
    EXPECT_EQ(m[1], (ObjPoint{3, 1}));
}

TEST(PartialUpdate, MatchesFullRecompute)
{
    auto prob = make_problem("bi-sphere:3");
    auto rng = make_rng(22);
    std::mt19937_64 g(23);
    const std::size_t p = 6, n = 3;
    const ObjPoint r{11, 11};
    for (int rep = 0; rep < 50; ++rep) {
        GSolution s;
        s.phi.resize(p * n);
        for (auto &v : s.phi) v = uniform(rng, -1.5, 1.5);
        s.objs.resize(p);
        for (std::size_t i = 0; i < p; ++i) s.objs[i] = prob->evaluate(std::span<const double>(s.phi.data() + i * n, n));
        s.value = uhv::uhv(s.objs, r);
        std::vector<std::size_t> changed{static_cast<std::size_t>(g() % p)};
        for (std::size_t k = 0; k < n; ++k) s.phi[changed[0] * n + k] += 0.3;
        const auto before = prob->eval_count();
        auto v = partial_uhv_update(s, changed, *prob, r);
        EXPECT_EQ(prob->eval_count(), before + 1);
        std::vector<ObjPoint> fresh(p);
        for (std::size_t i = 0; i < p; ++i) {
            Vector x(s.phi.begin() + static_cast<std::ptrdiff_t>(i * n), s.phi.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
            fresh[i] = {0, 0};
            double a = 0, b = 0;
            for (std::size_t k = 0; k < n; ++k) {
                a += x[k] * x[k];
                b += (x[k] - (k == 0)) * (x[k] - (k == 0));
            }
            fresh[i] = {a, b};
        }
        EXPECT_NEAR(v.uhv, oracle::uhv(fresh, r), 1e-12);
    }
}

TEST(PartialUpdate, EmptyChangeIsFree)
{
    auto prob = make_problem("bi-sphere:2");
    GSolution s;
    s.phi = {0.5, 0.0};
    s.objs = {{0.25, 0.25}};
    s.value = uhv::uhv(s.objs, {11, 11});
    const auto before = prob->eval_count();
    auto v = partial_uhv_update(s, {}, *prob, {11, 11});
    EXPECT_EQ(prob->eval_count(), before);
    EXPECT_EQ(v.uhv, s.value.uhv);
}

TEST(UhvGomea, BudgetOnlyCoversInit)
{
    auto prob = make_problem("bi-sphere:10");
    UhvGomeaConfig cfg;
    cfg.budget = cfg.p * cfg.pop_size;
    auto rng = make_rng(24);
    EliteArchive archive;
    TraceRecorder trace(cfg.r, std::nullopt, nullptr);
    auto res = uhv_gomea_run(*prob, cfg, rng, archive, &trace);
    EXPECT_EQ(res.fevals, cfg.budget);
    EXPECT_EQ(prob->eval_count(), cfg.budget);
    EXPECT_EQ(trace.rows().size(), 1u);
    EXPECT_EQ(res.set_f.size(), cfg.p);
}

TEST(UhvGomea, BudgetNeverExceeded)
{
    for (auto link : {Linkage::marginal, Linkage::full, Linkage::tree}) {
        auto prob = make_problem("bi-sphere:4");
        UhvGomeaConfig cfg;
        cfg.p = 3;
        cfg.pop_size = 20;
        cfg.linkage = link;
        cfg.budget = 5003;
        auto rng = make_rng(25);
        EliteArchive archive;
        TraceRecorder trace(cfg.r, std::nullopt, nullptr);
        auto res = uhv_gomea_run(*prob, cfg, rng, archive, &trace);
        EXPECT_LE(prob->eval_count(), cfg.budget);
        EXPECT_EQ(res.fevals, prob->eval_count());
        std::uint64_t last = 0;
        for (const auto &row : trace.rows()) {
            EXPECT_GT(row.fevals, last);
            last = row.fevals;
        }
    }
}

TEST(UhvGomea, FitnessNonDecreasing)
{
    auto prob = make_problem("bi-sphere:5");
    UhvGomeaConfig cfg;
    cfg.p = 4;
    cfg.pop_size = 20;
    cfg.budget = 20000;
    auto rng = make_rng(26);
    EliteArchive archive;
    TraceRecorder trace(cfg.r, std::nullopt, nullptr);
    uhv_gomea_run(*prob, cfg, rng, archive, &trace);
    for (std::size_t i = 1; i < trace.rows().size(); ++i)
        EXPECT_GE(trace.rows()[i].best_uhv, trace.rows()[i - 1].best_uhv);
}
