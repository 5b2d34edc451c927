#include <uhv/uhv_gomea.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace uhv
{

Linkage parse_linkage(const std::string &s)
{
    if (s == "lm" || s == "Lm" || s == "marginal") return Linkage::marginal;
    if (s == "lf" || s == "Lf" || s == "full") return Linkage::full;
    if (s == "lt" || s == "Lt" || s == "tree") return Linkage::tree;
    throw std::invalid_argument("unknown linkage '" + s + "' (expected lm, lf or lt)");
}

std::string to_string(Linkage l)
{
    switch (l) {
    case Linkage::marginal: return "lm";
    case Linkage::full: return "lf";
    case Linkage::tree: return "lt";
    }
    return "?";
}

std::vector<ObjPoint> slot_means(const std::vector<std::vector<ObjPoint>> &objs)
{
    if (objs.empty()) return {};
    const std::size_t p = objs.front().size();
    std::vector<ObjPoint> m(p, ObjPoint{0.0, 0.0});
    for (const auto &g : objs)
        for (std::size_t i = 0; i < p; ++i) {
            m[i][0] += g[i][0];
            m[i][1] += g[i][1];
        }
    const double inv = 1.0 / static_cast<double>(objs.size());
    for (auto &v : m) {
        v[0] *= inv;
        v[1] *= inv;
    }
    return m;
}

std::vector<std::size_t> greedy_assignment(std::span<const ObjPoint> sols, std::span<const ObjPoint> means)
{
    const std::size_t p = sols.size();
    if (means.size() != p) throw std::invalid_argument("greedy_assignment: size mismatch");
    std::vector<double> d(p * p);
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            double dx = sols[a][0] - means[b][0], dy = sols[a][1] - means[b][1];
            d[a * p + b] = dx * dx + dy * dy;
        }
    std::vector<std::size_t> perm(p, 0);
    std::vector<char> sol_used(p, 0), slot_used(p, 0);
    for (std::size_t step = 0; step < p; ++step) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t ba = 0, bb = 0;
        bool found = false;
        for (std::size_t a = 0; a < p; ++a) {
            if (sol_used[a]) continue;
            for (std::size_t b = 0; b < p; ++b) {
                if (slot_used[b]) continue;
                if (!found || d[a * p + b] < best) {
                    best = d[a * p + b];
                    ba = a;
                    bb = b;
                    found = true;
                }
            }
        }
        sol_used[ba] = slot_used[bb] = 1;
        perm[bb] = ba;
    }
    return perm;
}

void apply_permutation(Vector &phi, std::vector<ObjPoint> &objs, std::span<const std::size_t> perm, std::size_t n)
{
    const std::size_t p = perm.size();
    Vector phi2(phi.size());
    std::vector<ObjPoint> objs2(p);
    for (std::size_t k = 0; k < p; ++k) {
        std::copy_n(phi.begin() + static_cast<std::ptrdiff_t>(perm[k] * n), n, phi2.begin() + static_cast<std::ptrdiff_t>(k * n));
        objs2[k] = objs[perm[k]];
    }
    phi.swap(phi2);
    objs.swap(objs2);
}

namespace
{

std::vector<std::size_t> block_indices(const std::vector<std::size_t> &sols, std::size_t n)
{
    std::vector<std::size_t> idx;
    idx.reserve(sols.size() * n);
    for (auto s : sols)
        for (std::size_t k = 0; k < n; ++k) idx.push_back(s * n + k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace

Fos build_fos(Linkage kind, std::size_t p, std::size_t n, std::span<const ObjPoint> means, double tau,
              std::size_t pop_size)
{
    Fos fos;
    if (kind == Linkage::full) {
        std::vector<std::size_t> all(p * n);
        std::iota(all.begin(), all.end(), std::size_t{0});
        fos.add(std::move(all));
        return fos;
    }
    for (std::size_t i = 0; i < p; ++i) fos.add(block_indices({i}, n));
    if (kind == Linkage::marginal || p < 2) return fos;
    if (means.size() != p) throw std::invalid_argument("build_fos: tree linkage needs p slot means");

    const double limit = tau * static_cast<double>(pop_size) - 1.0;
    // UPGMA: cluster distance is the mean pairwise distance of their members
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < p; ++i) clusters.push_back({i});
    std::vector<char> alive(p, 1);
    auto pd = [&](std::size_t a, std::size_t b) {
        double dx = means[a][0] - means[b][0], dy = means[a][1] - means[b][1];
        return std::sqrt(dx * dx + dy * dy);
    };
    std::vector<std::vector<double>> dist(2 * p, std::vector<double>(2 * p, 0.0));
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) dist[a][b] = pd(a, b);

    for (std::size_t merge = 0; merge + 1 < p; ++merge) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t ba = 0, bb = 0;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            if (!alive[a]) continue;
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                if (!alive[b]) continue;
                if (dist[a][b] < best) {
                    best = dist[a][b];
                    ba = a;
                    bb = b;
                }
            }
        }
        std::vector<std::size_t> members = clusters[ba];
        members.insert(members.end(), clusters[bb].begin(), clusters[bb].end());
        std::sort(members.begin(), members.end());
        const std::size_t c = clusters.size();
        const double na = static_cast<double>(clusters[ba].size()), nb = static_cast<double>(clusters[bb].size());
        for (std::size_t o = 0; o < c; ++o) {
            if (!alive[o] || o == ba || o == bb) continue;
            double v = (na * dist[ba][o] + nb * dist[bb][o]) / (na + nb);
            dist[c][o] = dist[o][c] = v;
        }
        alive[ba] = alive[bb] = 0;
        alive.push_back(1);
        clusters.push_back(members);
        auto idx = block_indices(members, n);
        const bool skip = static_cast<double>(idx.size()) > limit;
        fos.add(std::move(idx), skip);
    }
    return fos;
}

UhvValue partial_uhv_update(GSolution &g, std::span<const std::size_t> changed, Problem &problem, const ObjPoint &r)
{
    const std::size_t n = problem.dim();
    for (auto i : changed)
        g.objs[i] = problem.evaluate(std::span<const double>(g.phi.data() + i * n, n));
    if (!changed.empty()) g.value = uhv(g.objs, r);
    return g.value;
}

std::vector<GSolution> initial_population(Problem &problem, std::size_t p, std::size_t pop_size, const ObjPoint &r,
                                          Rng &rng, EliteArchive &archive, const SeedPopulation *seeds)
{
    const std::size_t n = problem.dim();
    std::vector<GSolution> pop(pop_size);
    for (std::size_t j = 0; j < pop_size; ++j) {
        auto &g = pop[j];
        g.phi.resize(p * n);
        g.objs.resize(p);
        for (std::size_t i = 0; i < p; ++i) {
            std::span<double> x(g.phi.data() + i * n, n);
            const SeedSolution *s = nullptr;
            if (seeds && j < seeds->size() && i < (*seeds)[j].size() && !(*seeds)[j][i].x.empty()) s = &(*seeds)[j][i];
            if (s) {
                std::copy(s->x.begin(), s->x.end(), x.begin());
                if (s->f) {
                    g.objs[i] = *s->f;
                    continue;
                }
            } else {
                problem.sample_init(x, rng);
            }
            g.objs[i] = problem.evaluate(x);
            archive.insert(x, g.objs[i]);
        }
        g.value = uhv(g.objs, r);
    }
    return pop;
}

namespace
{

class UhvObjective final : public GomObjective
{
public:
    UhvObjective(Problem &prob, EliteArchive &arch, std::vector<GSolution> &pop, const UhvGomeaConfig &cfg, Rng &rng)
        : prob_(prob), arch_(arch), pop_(pop), cfg_(cfg), rng_(rng), n_(prob.dim())
    {
    }

    std::optional<double> try_update(std::size_t member, std::span<const std::size_t> subset,
                                     std::span<double> genotype) override
    {
        changed_.clear();
        for (auto idx : subset) {
            std::size_t s = idx / n_;
            if (changed_.empty() || changed_.back() != s) changed_.push_back(s);
        }
        if (prob_.eval_count() + changed_.size() > cfg_.budget) return std::nullopt;
        tmp_ = pop_[member].objs;
        for (auto i : changed_) {
            std::span<double> x = genotype.subspan(i * n_, n_);
            prob_.repair(x, rng_);
            tmp_[i] = prob_.evaluate(x);
            arch_.insert(x, tmp_[i]);
        }
        tmpv_ = uhv(tmp_, cfg_.r);
        return tmpv_.uhv;
    }

    void accept(std::size_t member) override
    {
        pop_[member].objs.swap(tmp_);
        pop_[member].value = tmpv_;
    }

    void reject(std::size_t) override {}

    bool in_bounds(std::span<const std::size_t> subset, std::span<const double> genotype) const override
    {
        std::size_t last = SIZE_MAX;
        for (auto idx : subset) {
            const std::size_t s = idx / n_;
            if (s == last) continue;
            last = s;
            if (!prob_.in_bounds(genotype.subspan(s * n_, n_))) return false;
        }
        return true;
    }

private:
    Problem &prob_;
    EliteArchive &arch_;
    std::vector<GSolution> &pop_;
    const UhvGomeaConfig &cfg_;
    Rng &rng_;
    std::size_t n_;
    std::vector<std::size_t> changed_;
    std::vector<ObjPoint> tmp_;
    UhvValue tmpv_;
};

double fitness_std(const std::vector<double> &f)
{
    double m = std::accumulate(f.begin(), f.end(), 0.0) / static_cast<double>(f.size());
    double v = 0.0;
    for (double x : f) v += (x - m) * (x - m);
    return std::sqrt(v / static_cast<double>(f.size()));
}

} // namespace

RunResult uhv_gomea_run(Problem &problem, const UhvGomeaConfig &cfg, Rng &rng, EliteArchive &archive,
                        RunMonitor *monitor, const SeedPopulation *seeds)
{
    const std::size_t n = problem.dim(), p = cfg.p, npop = cfg.pop_size;
    if (p == 0) throw config_error("p must be positive");
    std::size_t needed = 0;
    for (std::size_t j = 0; j < npop; ++j)
        for (std::size_t i = 0; i < p; ++i) {
            bool known = seeds && j < seeds->size() && i < (*seeds)[j].size() && !(*seeds)[j][i].x.empty()
                         && (*seeds)[j][i].f;
            if (!known) ++needed;
        }
    if (problem.eval_count() + needed > cfg.budget)
        throw config_error("budget too small for the initial population (" + std::to_string(needed) + " evaluations)");

    auto pop = initial_population(problem, p, npop, cfg.r, rng, archive, seeds);
    GomEngine engine(npop, p * n, cfg.gom);
    for (std::size_t j = 0; j < npop; ++j) {
        engine.genotypes()[j] = pop[j].phi;
        engine.fitness()[j] = pop[j].value.uhv;
    }
    // the engine owns the genotypes from here on; pop keeps objectives only
    for (auto &g : pop) g.phi.clear();

    RunResult res;
    auto report = [&](std::size_t gen) {
        std::size_t b = engine.best();
        Snapshot s;
        s.fevals = problem.eval_count();
        s.generation = gen;
        s.phase = cfg.phase;
        s.set = pop[b].objs;
        s.value = pop[b].value;
        s.archive = &archive;
        return monitor ? monitor->on_generation(s) : true;
    };

    UhvObjective obj(problem, archive, pop, cfg, rng);
    std::vector<std::vector<ObjPoint>> objs(npop);
    std::size_t gen = 0;
    bool go = report(0);
    if (!go) res.stopped = true;
    while (go && problem.eval_count() < cfg.budget) {
        for (std::size_t j = 0; j < npop; ++j) objs[j] = pop[j].objs;
        auto means = slot_means(objs);
        for (std::size_t j = 0; j < npop; ++j) {
            auto perm = greedy_assignment(pop[j].objs, means);
            apply_permutation(engine.genotypes()[j], pop[j].objs, perm, n);
        }
        if (cfg.linkage == Linkage::tree) {
            for (std::size_t j = 0; j < npop; ++j) objs[j] = pop[j].objs;
            means = slot_means(objs);
        }
        Fos fos = build_fos(cfg.linkage, p, n, means, cfg.gom.tau, npop);
        const auto before = problem.eval_count();
        bool ok = engine.generation(fos, obj, rng);
        ++gen;
        if (problem.eval_count() > before && !report(gen)) {
            res.stopped = true;
            break;
        }
        if (!ok) break;
        if (fitness_std(engine.fitness()) < cfg.convergence_std) {
            res.converged = true;
            break;
        }
        if (problem.eval_count() == before) break; // nothing left to sample
    }

    std::size_t b = engine.best();
    res.set_f = pop[b].objs;
    res.value = pop[b].value;
    for (std::size_t i = 0; i < p; ++i)
        res.set_x.emplace_back(engine.genotypes()[b].begin() + static_cast<std::ptrdiff_t>(i * n),
                               engine.genotypes()[b].begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    res.fevals = problem.eval_count();
    res.generations = gen;
    return res;
}

} // namespace uhv
