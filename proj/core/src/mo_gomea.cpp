#include <uhv/mo_gomea.hpp>

#include <uhv/hypervolume.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace uhv
{

std::vector<std::size_t> nondominated_rank(std::span<const ObjPoint> pts)
{
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
        if (pts[a][1] != pts[b][1]) return pts[a][1] < pts[b][1];
        return a < b;
    });
    // each layer is a staircase; its last point has the smallest f2 so far
    std::vector<ObjPoint> tails;
    std::vector<std::size_t> rank(pts.size(), 0);
    for (auto i : order) {
        const auto &q = pts[i];
        std::size_t layer = 0;
        while (layer < tails.size() && strictly_dominates(tails[layer], q)) ++layer;
        if (layer == tails.size()) tails.push_back(q);
        else tails[layer] = q;
        rank[i] = layer;
    }
    return rank;
}

namespace
{

struct Scale {
    ObjPoint lo{0.0, 0.0}, inv{1.0, 1.0};

    Scale() = default;
    explicit Scale(std::span<const ObjPoint> pts)
    {
        if (pts.empty()) return;
        ObjPoint hi = pts[0];
        lo = pts[0];
        for (const auto &q : pts)
            for (int d = 0; d < 2; ++d) {
                lo[d] = std::min(lo[d], q[d]);
                hi[d] = std::max(hi[d], q[d]);
            }
        for (int d = 0; d < 2; ++d) inv[d] = hi[d] > lo[d] ? 1.0 / (hi[d] - lo[d]) : 1.0;
    }
    ObjPoint operator()(const ObjPoint &q) const { return {(q[0] - lo[0]) * inv[0], (q[1] - lo[1]) * inv[1]}; }
};

double sq(const ObjPoint &a, const ObjPoint &b)
{
    double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

} // namespace

std::vector<std::vector<std::size_t>> cluster_selection(std::span<const ObjPoint> pts, std::size_t k,
                                                        std::size_t cluster_size)
{
    const std::size_t m = pts.size();
    std::vector<std::vector<std::size_t>> clusters;
    if (m == 0 || k == 0) return clusters;
    k = std::min(k, m);
    cluster_size = std::clamp<std::size_t>(cluster_size, 1, m);
    Scale sc(pts);
    std::vector<ObjPoint> z(m);
    for (std::size_t i = 0; i < m; ++i) z[i] = sc(pts[i]);

    std::vector<std::size_t> leaders;
    std::size_t first = 0;
    for (std::size_t i = 1; i < m; ++i)
        if (pts[i][0] < pts[first][0] || (pts[i][0] == pts[first][0] && pts[i][1] < pts[first][1])) first = i;
    leaders.push_back(first);
    std::vector<double> mind(m);
    for (std::size_t i = 0; i < m; ++i) mind[i] = sq(z[i], z[first]);
    while (leaders.size() < k) {
        std::size_t arg = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < m; ++i)
            if (mind[i] > best) {
                best = mind[i];
                arg = i;
            }
        leaders.push_back(arg);
        for (std::size_t i = 0; i < m; ++i) mind[i] = std::min(mind[i], sq(z[i], z[arg]));
    }

    std::vector<std::size_t> idx(m);
    for (auto l : leaders) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(cluster_size), idx.end(),
                          [&](std::size_t a, std::size_t b) {
                              double da = sq(z[a], z[l]), db = sq(z[b], z[l]);
                              return da < db || (da == db && a < b);
                          });
        clusters.emplace_back(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(cluster_size));
    }
    return clusters;
}

MoGomea::MoGomea(Problem &problem, const MoGomeaConfig &cfg, Rng &rng, EliteArchive &archive)
    : problem_(problem), cfg_(cfg), rng_(rng), archive_(archive)
{
    const std::size_t p = cfg.p, npop = cfg.pop_size, n = problem.dim();
    if (p == 0) throw config_error("p must be positive");
    if (problem.eval_count() + p * npop > cfg.budget)
        throw config_error("budget too small for the initial population (" + std::to_string(p * npop) + " evaluations)");
    auto pop = initial_population(problem, p, npop, cfg.r, rng, archive);
    for (auto &g : pop)
        for (std::size_t i = 0; i < p; ++i) {
            x_.emplace_back(g.phi.begin() + static_cast<std::ptrdiff_t>(i * n),
                            g.phi.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
            f_.push_back(g.objs[i]);
        }
    states_.resize(2 * p);
    if (cfg_.gom.max_no_improvement == 0) cfg_.gom.max_no_improvement = 25 + n;
}

double MoGomea::nondominated_fraction() const
{
    auto rk = nondominated_rank(f_);
    auto zero = std::count(rk.begin(), rk.end(), std::size_t{0});
    return static_cast<double>(zero) / static_cast<double>(rk.size());
}

std::vector<ObjPoint> MoGomea::reported_set(std::vector<Vector> *xs) const
{
    std::vector<ObjPoint> cand = archive_.objectives();
    cand.insert(cand.end(), f_.begin(), f_.end());
    auto ids = ghss(cand, cfg_.r, cfg_.p);
    std::vector<ObjPoint> out;
    for (auto i : ids) {
        out.push_back(cand[i]);
        if (xs) xs->push_back(i < archive_.size() ? archive_.entries()[i].x : x_[i - archive_.size()]);
    }
    return out;
}

bool MoGomea::step()
{
    const std::size_t m = x_.size(), n = problem_.dim();
    const double tau = cfg_.gom.tau;
    auto rank = nondominated_rank(f_);
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
    const std::size_t n_sel = selection_size(m, tau);
    std::vector<std::size_t> sel(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_sel));
    std::vector<ObjPoint> sel_f;
    for (auto i : sel) sel_f.push_back(f_[i]);

    const std::size_t k = std::min<std::size_t>(2 * cfg_.p, n_sel);
    const std::size_t csize = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(2.0 * tau * static_cast<double>(m) / static_cast<double>(2 * cfg_.p))));
    auto clusters = cluster_selection(sel_f, k, csize);

    Scale sc(sel_f);
    std::vector<ObjPoint> centers;
    std::vector<GaussianModel> models;
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        auto &cl = clusters[c];
        ObjPoint mu{0.0, 0.0};
        for (auto &i : cl) {
            i = sel[i];
            auto z = sc(f_[i]);
            mu[0] += z[0];
            mu[1] += z[1];
        }
        mu[0] /= static_cast<double>(cl.size());
        mu[1] /= static_cast<double>(cl.size());
        centers.push_back(mu);
    }
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        // the cluster itself is the selection
        models.push_back(
            fit_model(x_, clusters[c], all, 1.0, clusters[c].size(), states_[c].use_lw, cfg_.gom.variance_floor));
    }

    std::vector<Eigen::VectorXd> improved(clusters.size(), Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n)));
    std::vector<std::size_t> n_improved(clusters.size(), 0);
    std::vector<std::size_t> nearest(m);
    std::vector<std::size_t> assigned(clusters.size(), 0);
    for (std::size_t j = 0; j < m; ++j) {
        auto zj = sc(f_[j]);
        std::size_t c = 0;
        for (std::size_t q = 1; q < centers.size(); ++q)
            if (sq(zj, centers[q]) < sq(zj, centers[c])) c = q;
        nearest[j] = c;
        ++assigned[c];
    }
    // anticipated mean shift for the best ranked members of each cluster
    std::vector<Eigen::VectorXd> shift(clusters.size());
    std::vector<std::size_t> n_ams(clusters.size(), 0), used(clusters.size(), 0);
    std::vector<char> shifted(m, 0);
    if (cfg_.gom.multipliers) {
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            const auto &st = states_[c];
            if (st.prev_mean.size() != models[c].mean.size()) continue;
            shift[c] = cfg_.gom.ams_delta * st.multiplier * (models[c].mean - st.prev_mean);
            n_ams[c] = static_cast<std::size_t>(
                std::floor(cfg_.gom.ams_fraction * tau * static_cast<double>(assigned[c])));
        }
        for (auto j : order)
            if (used[nearest[j]] < n_ams[nearest[j]]) {
                shifted[j] = 1;
                ++used[nearest[j]];
            }
    }

    Vector cand(n);
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
        const std::size_t c = nearest[j];
        if (problem_.eval_count() + 1 > cfg_.budget) {
            ok = false;
            break;
        }
        cand = x_[j];
        const double mult = cfg_.gom.multipliers ? states_[c].multiplier : 1.0;
        const Eigen::VectorXd *sh = shifted[j] ? &shift[c] : nullptr;
        sample_partial(models[c], cand, rng_, mult, sh);
        for (std::size_t t = 0; t < cfg_.gom.max_resamples && !problem_.in_bounds(cand); ++t)
            sample_partial(models[c], cand, rng_, mult, sh);
        problem_.repair(cand, rng_);
        ObjPoint fc = problem_.evaluate(cand);
        auto res = archive_.insert(cand, fc);
        if (res != InsertResult::rejected || strictly_dominates(fc, f_[j])) {
            improved[c] += Eigen::Map<const Eigen::VectorXd>(cand.data(), static_cast<Eigen::Index>(n));
            ++n_improved[c];
            x_[j] = cand;
            f_[j] = fc;
        }
    }

    if (ok && !archive_.empty()) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (rank[i] >= rank[worst]) worst = i;
        std::uniform_int_distribution<std::size_t> pick(0, archive_.size() - 1);
        const auto &e = archive_.entries()[pick(rng_)];
        x_[worst] = e.x;
        f_[worst] = e.f;
    }

    if (cfg_.gom.multipliers) {
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            std::optional<double> sdr;
            if (n_improved[c] > 0)
                sdr = standard_deviation_ratio(models[c], improved[c] / static_cast<double>(n_improved[c]));
            adapt_multiplier(states_[c], cfg_.gom, sdr);
            states_[c].prev_mean = models[c].mean;
        }
    }
    return ok;
}

RunResult mo_gomea_run(Problem &problem, const MoGomeaConfig &cfg, Rng &rng, EliteArchive &archive,
                       RunMonitor *monitor)
{
    MoGomea mo(problem, cfg, rng, archive);
    RunResult res;
    std::size_t gen = 0;
    auto report = [&]() {
        auto set = mo.reported_set();
        Snapshot s;
        s.fevals = problem.eval_count();
        s.generation = gen;
        s.set = set;
        s.value = uhv(set, cfg.r);
        s.archive = &archive;
        return monitor ? monitor->on_generation(s) : true;
    };
    bool go = report();
    if (!go) res.stopped = true;
    while (go && problem.eval_count() < cfg.budget) {
        const auto before = problem.eval_count();
        bool ok = mo.step();
        ++gen;
        if (problem.eval_count() > before && !report()) {
            res.stopped = true;
            break;
        }
        if (!ok) break;
    }
    res.set_f = mo.reported_set(&res.set_x);
    res.value = uhv(res.set_f, cfg.r);
    res.fevals = problem.eval_count();
    res.generations = gen;
    return res;
}

SeedPopulation hybrid_seed_population(const EliteArchive &archive, std::size_t p, std::size_t pop_size)
{
    SeedPopulation seeds(pop_size, std::vector<SeedSolution>(p));
    const auto &e = archive.entries();
    if (e.empty()) return seeds;
    auto objs = archive.objectives();
    auto centers = ghss(objs, archive.ref(), p);
    const std::size_t c = std::max<std::size_t>(1, (2 * e.size()) / p);
    const std::size_t take = std::min({c, pop_size, e.size()});
    std::vector<std::size_t> idx(e.size());
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const auto &cx = e[centers[i]].x;
        std::vector<double> d(e.size());
        for (std::size_t a = 0; a < e.size(); ++a) {
            double s = 0.0;
            for (std::size_t q = 0; q < cx.size(); ++q) s += (e[a].x[q] - cx[q]) * (e[a].x[q] - cx[q]);
            d[a] = s;
        }
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end(),
                          [&](std::size_t a, std::size_t b) { return d[a] < d[b] || (d[a] == d[b] && a < b); });
        for (std::size_t j = 0; j < take; ++j) seeds[j][i] = SeedSolution{e[idx[j]].x, e[idx[j]].f};
    }
    return seeds;
}

RunResult hybrid_run(Problem &problem, const HybridConfig &cfg, Rng &rng, EliteArchive &archive, RunMonitor *monitor)
{
    MoGomeaConfig mc{cfg.p, cfg.pop_size, cfg.r, cfg.budget, cfg.gom};
    MoGomea mo(problem, mc, rng, archive);
    RunResult res;
    std::size_t gen = 0;
    auto report = [&]() {
        auto set = mo.reported_set();
        Snapshot s;
        s.fevals = problem.eval_count();
        s.generation = gen;
        s.set = set;
        s.value = uhv(set, cfg.r);
        s.archive = &archive;
        return monitor ? monitor->on_generation(s) : true;
    };
    bool go = report();
    bool switched = false;
    while (go && problem.eval_count() < cfg.budget) {
        const auto before = problem.eval_count();
        bool ok = mo.step();
        ++gen;
        if (problem.eval_count() > before && !report()) {
            go = false;
            break;
        }
        if (!ok) break;
        if (mo.nondominated_fraction() >= cfg.nd_fraction || archive.target_hit()) {
            switched = true;
            break;
        }
    }
    if (!go) res.stopped = true;

    if (switched) {
        res.switch_fevals = problem.eval_count();
        auto seeds = hybrid_seed_population(archive, cfg.p, cfg.pop_size);
        std::size_t needed = 0;
        for (const auto &row : seeds)
            for (const auto &s : row)
                if (s.x.empty() || !s.f) ++needed;
        if (problem.eval_count() + needed <= cfg.budget) {
            UhvGomeaConfig uc;
            uc.p = cfg.p;
            uc.pop_size = cfg.pop_size;
            uc.linkage = cfg.linkage;
            uc.r = cfg.r;
            uc.budget = cfg.budget;
            uc.gom = cfg.gom;
            uc.convergence_std = cfg.convergence_std;
            uc.phase = 1;
            auto sub = uhv_gomea_run(problem, uc, rng, archive, monitor, &seeds);
            sub.switch_fevals = res.switch_fevals;
            sub.generations += gen;
            return sub;
        }
    }
    res.set_f = mo.reported_set(&res.set_x);
    res.value = uhv(res.set_f, cfg.r);
    res.fevals = problem.eval_count();
    res.generations = gen;
    return res;
}

} // namespace uhv
