#include <uhv/archive.hpp>
#include <uhv/gomea.hpp>
#include <uhv/problems.hpp>
#include <uhv/rng.hpp>
#include <uhv/uhv_gomea.hpp>

#include <benchmark/benchmark.h>

#include <numeric>

using namespace uhv;

static void BM_FitModel(benchmark::State &state)
{
    const auto dim = static_cast<std::size_t>(state.range(0));
    auto rng = make_rng(5);
    std::vector<Vector> rows(400, Vector(dim));
    for (auto &r : rows)
        for (auto &v : r) v = standard_normal(rng);
    std::vector<std::size_t> sel(140), sub(dim);
    std::iota(sel.begin(), sel.end(), std::size_t{0});
    std::iota(sub.begin(), sub.end(), std::size_t{0});
    for (auto _ : state) {
        bool lw = false;
        benchmark::DoNotOptimize(fit_model(rows, sel, sub, 0.35, rows.size(), lw));
    }
}
BENCHMARK(BM_FitModel)->Arg(3)->Arg(10)->Arg(30)->Arg(90);

static void BM_SamplePartial(benchmark::State &state)
{
    const auto dim = static_cast<Eigen::Index>(state.range(0));
    GaussianModel m;
    m.subset.resize(static_cast<std::size_t>(dim));
    std::iota(m.subset.begin(), m.subset.end(), std::size_t{0});
    m.mean = Eigen::VectorXd::Zero(dim);
    m.factor = Eigen::MatrixXd::Identity(dim, dim);
    auto rng = make_rng(6);
    Vector g(static_cast<std::size_t>(dim));
    for (auto _ : state) {
        sample_partial(m, g, rng);
        benchmark::DoNotOptimize(g.data());
    }
}
BENCHMARK(BM_SamplePartial)->Arg(3)->Arg(10)->Arg(90);

// One full UHV-GOMEA run per iteration: throughput in MO-fevals per second.
static void BM_UhvGomeaBiSphere(benchmark::State &state)
{
    UhvGomeaConfig cfg;
    cfg.linkage = static_cast<Linkage>(state.range(0));
    cfg.budget = 50000;
    std::uint64_t evals = 0;
    for (auto _ : state) {
        auto prob = make_problem("bi-sphere:10");
        auto rng = make_rng(7);
        EliteArchive archive;
        auto res = uhv_gomea_run(*prob, cfg, rng, archive);
        evals += res.fevals;
    }
    state.counters["fevals/s"] = benchmark::Counter(static_cast<double>(evals), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_UhvGomeaBiSphere)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
