#include <uhv/sofomore.hpp>

#include <uhv/uhv_gomea.hpp>

#include <cmath>
#include <numeric>

namespace uhv
{

namespace
{

ApproxBoundary boundary_without(std::span<const ObjPoint> inc, std::size_t i, const ObjPoint &r)
{
    std::vector<ObjPoint> rest;
    rest.reserve(inc.size());
    for (std::size_t k = 0; k < inc.size(); ++k)
        if (k != i) rest.push_back(inc[k]);
    return ApproxBoundary(rest, r);
}

class HObjective final : public GomObjective
{
public:
    HObjective(Problem &prob, EliteArchive &arch, std::vector<ObjPoint> &objs, const ApproxBoundary &b,
               std::uint64_t budget, Rng &rng)
        : prob_(prob), arch_(arch), objs_(objs), b_(b), budget_(budget), rng_(rng)
    {
    }

    std::optional<double> try_update(std::size_t, std::span<const std::size_t>, std::span<double> x) override
    {
        if (prob_.eval_count() + 1 > budget_) return std::nullopt;
        prob_.repair(x, rng_);
        f_ = prob_.evaluate(x);
        arch_.insert(x, f_);
        return uhvi(f_, b_);
    }
    void accept(std::size_t member) override { objs_[member] = f_; }
    void reject(std::size_t) override {}
    bool in_bounds(std::span<const std::size_t>, std::span<const double> x) const override { return prob_.in_bounds(x); }

private:
    Problem &prob_;
    EliteArchive &arch_;
    std::vector<ObjPoint> &objs_;
    const ApproxBoundary &b_;
    std::uint64_t budget_;
    Rng &rng_;
    ObjPoint f_{};
};

} // namespace

double h_fitness(std::size_t i, const ObjPoint &y, std::span<const ObjPoint> incumbents, const ObjPoint &r)
{
    return uhvi(y, boundary_without(incumbents, i, r));
}

Sofomore::Sofomore(Problem &problem, const SofomoreConfig &cfg, Rng &rng, EliteArchive &archive)
    : problem_(problem), cfg_(cfg), rng_(rng), archive_(archive)
{
    const std::size_t p = cfg.p, npop = cfg.pop_size, n = problem.dim();
    if (p == 0) throw config_error("p must be positive");
    if (problem.eval_count() + p * npop > cfg.budget)
        throw config_error("budget too small for the initial population (" + std::to_string(p * npop) + " evaluations)");

    // same draws as the UHV-GOMEA initialization, then slot-wise partition
    auto pop = initial_population(problem, p, npop, cfg.r, rng, archive);
    std::vector<std::vector<ObjPoint>> all(npop);
    for (std::size_t j = 0; j < npop; ++j) all[j] = pop[j].objs;
    auto means = slot_means(all);
    for (auto &g : pop) {
        auto perm = greedy_assignment(g.objs, means);
        apply_permutation(g.phi, g.objs, perm, n);
    }

    engines_.reserve(p);
    objs_.assign(p, std::vector<ObjPoint>(npop));
    for (std::size_t i = 0; i < p; ++i) {
        engines_.emplace_back(npop, n, cfg.gom);
        for (std::size_t j = 0; j < npop; ++j) {
            auto &row = engines_[i].genotypes()[j];
            row.assign(pop[j].phi.begin() + static_cast<std::ptrdiff_t>(i * n),
                       pop[j].phi.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
            objs_[i][j] = pop[j].objs[i];
        }
    }

    // start from the best g-solution, then let each slot take its best member
    std::size_t best = 0;
    for (std::size_t j = 1; j < npop; ++j)
        if (pop[j].value.uhv > pop[best].value.uhv) best = j;
    inc_f_ = pop[best].objs;
    inc_x_.resize(p);
    for (std::size_t i = 0; i < p; ++i) inc_x_[i] = engines_[i].genotypes()[best];
    for (std::size_t i = 0; i < p; ++i) {
        auto b = boundary_without(inc_f_, i, cfg_.r);
        refresh(i, b);
        update_incumbent(i);
    }
}

void Sofomore::refresh(std::size_t i, const ApproxBoundary &b)
{
    auto &fit = engines_[i].fitness();
    for (std::size_t j = 0; j < fit.size(); ++j) fit[j] = uhvi(objs_[i][j], b);
}

void Sofomore::update_incumbent(std::size_t i)
{
    std::size_t b = engines_[i].best();
    inc_f_[i] = objs_[i][b];
    inc_x_[i] = engines_[i].genotypes()[b];
}

bool Sofomore::step()
{
    Fos fos;
    std::vector<std::size_t> all(problem_.dim());
    std::iota(all.begin(), all.end(), std::size_t{0});
    fos.add(std::move(all));
    for (std::size_t i = 0; i < cfg_.p; ++i) {
        auto b = boundary_without(inc_f_, i, cfg_.r);
        refresh(i, b);
        HObjective obj(problem_, archive_, objs_[i], b, cfg_.budget, rng_);
        bool ok = engines_[i].generation(fos, obj, rng_);
        update_incumbent(i);
        if (!ok) return false;
    }
    return true;
}

bool Sofomore::converged() const
{
    for (const auto &e : engines_) {
        const auto &f = e.fitness();
        double m = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
        double v = 0.0;
        for (double x : f) v += (x - m) * (x - m);
        if (std::sqrt(v / static_cast<double>(f.size())) >= cfg_.convergence_std) return false;
    }
    return true;
}

RunResult sofomore_run(Problem &problem, const SofomoreConfig &cfg, Rng &rng, EliteArchive &archive,
                       RunMonitor *monitor)
{
    Sofomore so(problem, cfg, rng, archive);
    RunResult res;
    std::size_t gen = 0;
    auto report = [&]() {
        Snapshot s;
        s.fevals = problem.eval_count();
        s.generation = gen;
        s.set = so.incumbent_objs();
        s.value = uhv(so.incumbent_objs(), cfg.r);
        s.archive = &archive;
        return monitor ? monitor->on_generation(s) : true;
    };
    bool go = report();
    if (!go) res.stopped = true;
    while (go && problem.eval_count() < cfg.budget) {
        const auto before = problem.eval_count();
        bool ok = so.step();
        ++gen;
        if (problem.eval_count() > before && !report()) {
            res.stopped = true;
            break;
        }
        if (!ok) break;
        if (so.converged()) {
            res.converged = true;
            break;
        }
    }
    res.set_f = so.incumbent_objs();
    res.set_x = so.incumbent_x();
    res.value = uhv(res.set_f, cfg.r);
    res.fevals = problem.eval_count();
    res.generations = gen;
    return res;
}

} // namespace uhv
