#pragma once

#include <uhv/driver.hpp>
#include <uhv/gomea.hpp>
#include <uhv/problems.hpp>
#include <uhv/uhv_gomea.hpp>

#include <functional>

namespace uhv
{

// Non-domination rank per point (0 = non-dominated).
std::vector<std::size_t> nondominated_rank(std::span<const ObjPoint> pts);

// Leaders by farthest-point traversal (first: minimal f1), each cluster the
// leader's `cluster_size` nearest members. Distances are Euclidean after
// scaling each objective by its range over `pts`. Ties go to lower indices.
// Returns clusters as indices into pts.
std::vector<std::vector<std::size_t>> cluster_selection(std::span<const ObjPoint> pts, std::size_t k,
                                                        std::size_t cluster_size);

struct MoGomeaConfig {
    std::size_t p = 9;
    std::size_t pop_size = 31; // N; the MO population holds p * N solutions
    ObjPoint r{11.0, 11.0};
    std::uint64_t budget = 1000000;
    GomOptions gom;
};

class MoGomea
{
public:
    MoGomea(Problem &problem, const MoGomeaConfig &cfg, Rng &rng, EliteArchive &archive);

    // One generation. Returns false when the budget ran out.
    bool step();

    const std::vector<Vector> &members() const { return x_; }
    const std::vector<ObjPoint> &objectives() const { return f_; }
    double nondominated_fraction() const;
    const std::vector<SubsetState> &cluster_states() const { return states_; }
    // gHSS of archive then population objectives.
    std::vector<ObjPoint> reported_set(std::vector<Vector> *xs = nullptr) const;

private:
    Problem &problem_;
    MoGomeaConfig cfg_;
    Rng &rng_;
    EliteArchive &archive_;
    std::vector<Vector> x_;
    std::vector<ObjPoint> f_;
    std::vector<SubsetState> states_;
};

RunResult mo_gomea_run(Problem &problem, const MoGomeaConfig &cfg, Rng &rng, EliteArchive &archive,
                       RunMonitor *monitor = nullptr);

struct HybridConfig {
    std::size_t p = 9;
    std::size_t pop_size = 31;
    Linkage linkage = Linkage::marginal;
    ObjPoint r{11.0, 11.0};
    std::uint64_t budget = 1000000;
    GomOptions gom;
    double nd_fraction = 0.9;
    double convergence_std = 1e-20;
};

// Successor population of the UHV phase built from the archive: gHSS seeds,
// decision-space clusters of max(1, floor(2|E|/p)) nearest entries, slot i
// of member j taken from cluster i's j-th entry; the rest left for uniform
// sampling.
SeedPopulation hybrid_seed_population(const EliteArchive &archive, std::size_t p, std::size_t pop_size);

RunResult hybrid_run(Problem &problem, const HybridConfig &cfg, Rng &rng, EliteArchive &archive,
                     RunMonitor *monitor = nullptr);

} // namespace uhv
