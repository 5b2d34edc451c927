#pragma once

#include <uhv/driver.hpp>
#include <uhv/gomea.hpp>
#include <uhv/problems.hpp>

#include <string>

namespace uhv
{

enum class Linkage { marginal, full, tree };

Linkage parse_linkage(const std::string &s);
std::string to_string(Linkage l);

// p MO-solutions flattened into one genotype.
struct GSolution {
    Vector phi;
    std::vector<ObjPoint> objs;
    UhvValue value;
};

// Mean objective vector per slot over the population.
std::vector<ObjPoint> slot_means(const std::vector<std::vector<ObjPoint>> &objs);

// Greedy matching: repeatedly take the globally closest (solution, mean)
// pair. Returns perm with slot k receiving solution perm[k].
std::vector<std::size_t> greedy_assignment(std::span<const ObjPoint> sols, std::span<const ObjPoint> means);

// Reorders the MO-solutions of phi/objs (blocks of n) by perm.
void apply_permutation(Vector &phi, std::vector<ObjPoint> &objs, std::span<const std::size_t> perm, std::size_t n);

// Marginal: p blocks of n; full: one set; tree: marginals then the UPGMA
// merges of the slot means in creation order, merges with more than
// tau * pop_size - 1 indices skipped.
Fos build_fos(Linkage kind, std::size_t p, std::size_t n, std::span<const ObjPoint> means, double tau,
              std::size_t pop_size);

// Re-evaluates the listed MO-solutions and recomputes the indicator.
UhvValue partial_uhv_update(GSolution &g, std::span<const std::size_t> changed, Problem &problem, const ObjPoint &r);

struct SeedSolution {
    Vector x;                  // empty: sample uniformly
    std::optional<ObjPoint> f; // empty: evaluate
};
using SeedPopulation = std::vector<std::vector<SeedSolution>>; // pop_size x p

struct UhvGomeaConfig {
    std::size_t p = 9;
    std::size_t pop_size = 31;
    Linkage linkage = Linkage::marginal;
    ObjPoint r{11.0, 11.0};
    std::uint64_t budget = 1000000;
    GomOptions gom;
    double convergence_std = 1e-20;
    int phase = 0;
};

// Uniform initial population in the order shared by every driver: member j,
// then solution i. Evaluates all p * pop_size solutions.
std::vector<GSolution> initial_population(Problem &problem, std::size_t p, std::size_t pop_size, const ObjPoint &r,
                                          Rng &rng, EliteArchive &archive, const SeedPopulation *seeds = nullptr);

RunResult uhv_gomea_run(Problem &problem, const UhvGomeaConfig &cfg, Rng &rng, EliteArchive &archive,
                        RunMonitor *monitor = nullptr, const SeedPopulation *seeds = nullptr);

} // namespace uhv
