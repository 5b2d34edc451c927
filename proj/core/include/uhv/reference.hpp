#pragma once

#include <uhv/front.hpp>
#include <uhv/metrics.hpp>

#include <optional>
#include <string>
#include <vector>

namespace uhv
{

// Directory holding hv_reference.csv and niche_boundaries.csv. The
// UHV_DATA_DIR environment variable overrides the build-time default.
std::string data_dir();

// Versioned table `problem,p,r,hv_star,provenance`; r written as "r1:r2".
// Problem keys are names ("wfg4") or name:n for n-dependent fronts.
class ReferenceTable
{
public:
    static ReferenceTable load(const std::string &path);
    static ReferenceTable load_default();
    void save(const std::string &path) const;

    // Exact "name:n" key first, then the bare name.
    std::optional<HvReference> find(const std::string &problem, std::size_t n, std::size_t p, const ObjPoint &r) const;
    void upsert(HvReference ref);
    const std::vector<HvReference> &entries() const { return entries_; }

private:
    std::vector<HvReference> entries_;
};

struct HvOptimum {
    double hv = 0.0;
    std::vector<double> params;
    std::vector<ObjPoint> points;
};

// Best size-p subset of the curve for HV w.r.t. r: exact dynamic program over
// `grid` curve samples, then coordinate-wise golden-section refinement.
HvOptimum optimal_hv(const FrontCurve &curve, std::size_t p, const ObjPoint &r, std::size_t grid = 2001);

// Problem keys whose front depends on n get the n suffix.
std::string reference_key(const std::string &problem, std::size_t n);

// Objective-space niches: ZDT3's front segments; ZDT6's f1 ranges between
// the local minima of f1 over the six x1 periods.
NicheIntervals niche_intervals(const std::string &problem);

struct NicheTable {
    std::vector<std::pair<std::string, NicheIntervals>> rows;
    static NicheTable load(const std::string &path);
    void save(const std::string &path) const;
    const NicheIntervals *find(const std::string &problem) const;
};

// Recomputes the reference files in `dir`.
void rebuild_references(const std::string &dir);

} // namespace uhv
