#include <uhv/hypervolume.hpp>
#include <uhv/problems.hpp>
#include <uhv/rng.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace uhv;

TEST(Problems, BiSphereUnitVector)
{
    auto p = make_problem("bi-sphere:2");
    Vector x{1.0, 0.0};
    auto f = p->evaluate(x);
    EXPECT_DOUBLE_EQ(f[0], 1.0);
    EXPECT_DOUBLE_EQ(f[1], 0.0);
}

TEST(Problems, BiSphereMidpoint)
{
    auto p = make_problem("bi-sphere:10");
    Vector x(10, 0.0);
    x[0] = 0.5;
    auto f = p->evaluate(x);
    EXPECT_DOUBLE_EQ(f[0], 0.25);
    EXPECT_DOUBLE_EQ(f[1], 0.25);
}

TEST(Problems, EvalCounter)
{
    auto p = make_problem("zdt6:10");
    Vector x(10, 0.3);
    const auto before = p->eval_count();
    p->evaluate(x);
    EXPECT_EQ(p->eval_count(), before + 1);
}

TEST(Problems, LengthMismatchThrows)
{
    auto p = make_problem("bi-sphere:10");
    Vector x(9, 0.0);
    EXPECT_THROW(p->evaluate(x), std::invalid_argument);
}

TEST(Problems, OutOfBoxThrows)
{
    auto p = make_problem("zdt3:10");
    Vector x(10, 0.5);
    x[0] = 1.2;
    EXPECT_THROW(p->evaluate(x), std::domain_error);
}

TEST(Problems, UnknownProblemThrows) { EXPECT_ANY_THROW(make_problem("dtlz2:10")); }

TEST(Problems, RepairInBoxUnchanged)
{
    auto p = make_problem("zdt3:10");
    auto rng = make_rng(3);
    Vector x(10, 0.25);
    const Vector copy = x;
    EXPECT_FALSE(p->repair(x, rng));
    EXPECT_EQ(x, copy);
}

TEST(Problems, RepairOutOfBox)
{
    auto p = make_problem("zdt3:10");
    auto rng = make_rng(3);
    Vector x(10, 0.25);
    x[0] = 1.2;
    EXPECT_TRUE(p->repair(x, rng));
    for (double v : x) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
}

TEST(Problems, RepairUnbounded)
{
    auto p = make_problem("bi-sphere:10");
    auto rng = make_rng(3);
    Vector x(10, 1e6);
    const Vector copy = x;
    EXPECT_FALSE(p->repair(x, rng));
    EXPECT_EQ(x, copy);
}

TEST(Problems, BiSphereOracleOnFront)
{
    auto p = make_problem("bi-sphere:10");
    auto o = p->front_oracle(1000);
    EXPECT_NEAR(o.distance({0.25, 0.25}), 0.0, 1e-12);
}

TEST(Problems, BiSphereFrontParameterization)
{
    auto p = make_problem("bi-sphere:10");
    auto c = p->front_curve();
    auto a = c(0.0), b = c(1.0);
    EXPECT_NEAR(a[0], 0.0, 1e-15);
    EXPECT_NEAR(a[1], 1.0, 1e-15);
    EXPECT_NEAR(b[0], 1.0, 1e-15);
    EXPECT_NEAR(b[1], 0.0, 1e-15);
    for (double t : {0.1, 0.37, 0.8}) {
        Vector x(10, 0.0);
        x[0] = t;
        auto f = p->evaluate(x);
        auto g = c(t);
        EXPECT_NEAR(f[0], g[0], 1e-14);
        EXPECT_NEAR(f[1], g[1], 1e-14);
    }
    auto s = c.sample(1000);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j) ASSERT_FALSE(strictly_dominates(s[i], s[j]));
}

TEST(Problems, SampledFrontsMutuallyNondominated)
{
    for (const char *name : {"zdt3:10", "zdt6:10", "wfg4"}) {
        auto p = make_problem(name);
        auto o = p->front_oracle(5000);
        const auto &s = o.samples();
        ASSERT_GE(s.size(), 100u) << name;
        std::vector<ObjPoint> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        // sorted by f1, non-domination means f2 strictly decreasing
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            ASSERT_LT(sorted[i - 1][0], sorted[i][0]) << name;
            ASSERT_GT(sorted[i - 1][1], sorted[i][1]) << name;
        }
    }
}

TEST(Problems, FrontEndpointsScaled)
{
    for (const char *name : {"bi-sphere:10", "sphere-rotatedElli:3", "sphere-Rosenbrock:10"}) {
        auto p = make_problem(name);
        auto c = p->front_curve();
        auto lo = c(c.segments.front().first);
        auto hi = c(c.segments.back().second);
        EXPECT_NEAR(lo[0], 0.0, 1e-12) << name;
        EXPECT_NEAR(lo[1], 1.0, 1e-12) << name;
        EXPECT_NEAR(hi[0], 1.0, 1e-12) << name;
        EXPECT_NEAR(hi[1], 0.0, 1e-12) << name;
    }
}

TEST(Problems, WfgDefaults)
{
    auto p = make_problem("wfg4");
    EXPECT_EQ(p->dim(), 24u);
    EXPECT_TRUE(p->bounded());
    for (std::size_t i = 0; i < p->dim(); ++i) EXPECT_DOUBLE_EQ(p->upper()[i], 2.0 * (i + 1));
}

TEST(Problems, SpecRoundTrip)
{
    auto s = parse_problem_spec("zdt6:10");
    EXPECT_EQ(s.name, "zdt6");
    EXPECT_EQ(s.n, 10u);
    EXPECT_EQ(s.to_string(), "zdt6:10");
}
