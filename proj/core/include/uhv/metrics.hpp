#pragma once

#include <uhv/front.hpp>
#include <uhv/types.hpp>

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace uhv
{

struct HvReference {
    std::string problem;
    std::size_t p = 0;
    ObjPoint r{11.0, 11.0};
    double hv_star = 0.0;
    std::string provenance;
};

// hv_star - HV(A(set)). Values in [-tol, 0) are clamped to 0; below -tol a
// stale_reference_error is thrown.
double delta_hv(std::span<const ObjPoint> set, const ObjPoint &r, const HvReference &ref, double tol = 1e-9);

// Mean distance of the points of A(set) to the front; NaN when A(set) is empty.
double gd(std::span<const ObjPoint> set, const ObjPoint &r, const FrontOracle &oracle);

// Mean distance of the front samples to their nearest archive point.
double igd(std::span<const ObjPoint> archive, std::span<const ObjPoint> front_samples);
double igd(std::span<const ObjPoint> archive, const FrontOracle &oracle);

using NicheIntervals = std::vector<std::pair<double, double>>; // f1 ranges, half-open except the last

// Members of A(set) per f1 interval; with whole_set every point inside the
// r-box counts, dominated or not.
std::vector<std::size_t> niche_counts(std::span<const ObjPoint> set, const ObjPoint &r, const NicheIntervals &niches,
                                      bool whole_set = false);

struct RankSumResult {
    bool significant = false;
    double p_value = 1.0;
    double z = 0.0;
};

// Two-sided Wilcoxon rank-sum test, normal approximation with tie correction.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b, double alpha = 0.05);

} // namespace uhv
