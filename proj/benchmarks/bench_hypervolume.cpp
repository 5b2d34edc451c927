#include <uhv/archive.hpp>
#include <uhv/hypervolume.hpp>
#include <uhv/rng.hpp>

#include <benchmark/benchmark.h>

#include <algorithm>

using namespace uhv;

namespace
{
const ObjPoint kR{11.0, 11.0};

std::vector<ObjPoint> cloud(std::size_t k, std::uint64_t seed)
{
    auto rng = make_rng(seed);
    std::vector<ObjPoint> pts(k);
    for (auto &p : pts) p = {uniform(rng, 0.0, 12.0), uniform(rng, 0.0, 12.0)};
    return pts;
}

std::vector<ObjPoint> front(std::size_t k)
{
    std::vector<ObjPoint> pts(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(k);
        pts[i] = {t * t, (1 - t) * (1 - t)};
    }
    return pts;
}
} // namespace

static void BM_Hv2d(benchmark::State &state)
{
    auto pts = cloud(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(hv2d(pts, kR));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hv2d)->RangeMultiplier(4)->Range(8, 8192)->Complexity(benchmark::oNLogN);

static void BM_Uhv(benchmark::State &state)
{
    auto pts = cloud(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(uhv::uhv(pts, kR));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Uhv)->RangeMultiplier(4)->Range(8, 8192)->Complexity();

static void BM_Uhvi(benchmark::State &state)
{
    auto pts = front(static_cast<std::size_t>(state.range(0)));
    ApproxBoundary b(pts, kR);
    auto probes = cloud(256, 3);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(uhvi(probes[i], b));
        i = (i + 1) % probes.size();
    }
}
BENCHMARK(BM_Uhvi)->Arg(9)->Arg(33)->Arg(1000);

static void BM_Ghss(benchmark::State &state)
{
    auto pts = front(1000);
    for (auto _ : state) benchmark::DoNotOptimize(ghss(pts, kR, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Ghss)->Arg(9)->Arg(33);

static void BM_ArchiveInsert(benchmark::State &state)
{
    auto pts = front(20000);
    auto rng = make_rng(4);
    std::shuffle(pts.begin(), pts.end(), rng);
    for (auto _ : state) {
        EliteArchive a(kR, static_cast<std::size_t>(state.range(0)));
        for (const auto &p : pts) {
            const double x[2] = {p[0], p[1]};
            a.insert(x, p);
        }
        benchmark::DoNotOptimize(a.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_ArchiveInsert)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
