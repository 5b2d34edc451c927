#pragma once

#include <uhv/driver.hpp>
#include <uhv/gomea.hpp>
#include <uhv/problems.hpp>

namespace uhv
{

struct SofomoreConfig {
    std::size_t p = 9;
    std::size_t pop_size = 31; // per inner optimizer
    ObjPoint r{11.0, 11.0};
    std::uint64_t budget = 1000000;
    GomOptions gom;
    double convergence_std = 1e-20;
};

// Dynamic fitness of slot i: UHVI of y against the set without incumbent i.
double h_fitness(std::size_t i, const ObjPoint &y, std::span<const ObjPoint> incumbents, const ObjPoint &r);

// p single-objective GOM instances (full linkage over n variables), each
// maximizing h_i, run one generation each in turn.
class Sofomore
{
public:
    Sofomore(Problem &problem, const SofomoreConfig &cfg, Rng &rng, EliteArchive &archive);

    // One round over all optimizers. Returns false when the budget ran out.
    bool step();

    const std::vector<ObjPoint> &incumbent_objs() const { return inc_f_; }
    const std::vector<Vector> &incumbent_x() const { return inc_x_; }
    const GomEngine &optimizer(std::size_t i) const { return engines_[i]; }
    const std::vector<ObjPoint> &optimizer_objs(std::size_t i) const { return objs_[i]; }
    bool converged() const;

private:
    void refresh(std::size_t i, const ApproxBoundary &b);
    void update_incumbent(std::size_t i);

    Problem &problem_;
    SofomoreConfig cfg_;
    Rng &rng_;
    EliteArchive &archive_;
    std::vector<GomEngine> engines_;
    std::vector<std::vector<ObjPoint>> objs_;
    std::vector<ObjPoint> inc_f_;
    std::vector<Vector> inc_x_;
};

RunResult sofomore_run(Problem &problem, const SofomoreConfig &cfg, Rng &rng, EliteArchive &archive,
                       RunMonitor *monitor = nullptr);

} // namespace uhv
