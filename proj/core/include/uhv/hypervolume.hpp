#pragma once

#include <uhv/types.hpp>

#include <span>
#include <vector>

namespace uhv
{

enum class Dominance { strict, weak, none };

// strict: a <= b everywhere and < somewhere; weak: a == b.
Dominance dominates(const ObjPoint &a, const ObjPoint &b);
bool strictly_dominates(const ObjPoint &a, const ObjPoint &b);
bool weakly_dominates(const ObjPoint &a, const ObjPoint &b);
bool inside(const ObjPoint &y, const ObjPoint &r);

// Indices of the non-dominated points strictly inside r, ordered by f1.
// Of equal points the first occurrence is kept.
std::vector<std::size_t> approximation_set(std::span<const ObjPoint> pts, const ObjPoint &r);

double hv2d(std::span<const ObjPoint> pts, const ObjPoint &r);

// Sorted front of A(S) bounded by r.
class ApproxBoundary
{
public:
    ApproxBoundary() = default;
    ApproxBoundary(std::span<const ObjPoint> pts, const ObjPoint &r);

    const std::vector<ObjPoint> &front() const { return front_; }
    const ObjPoint &ref() const { return r_; }
    // Staircase corners c_0 .. c_k (outer corners of the dominated region).
    std::vector<ObjPoint> corners() const;
    double hv() const;

    // Inserts y if it is inside r and not weakly dominated; removes the
    // points it dominates. Returns whether the front changed.
    bool insert(const ObjPoint &y);

private:
    std::vector<ObjPoint> front_;
    ObjPoint r_{};
};

double hvi2d(const ObjPoint &x, const ApproxBoundary &b);
double uncrowded_distance(const ObjPoint &x, const ApproxBoundary &b);
double uhvi(const ObjPoint &x, const ApproxBoundary &b);
double uhvi(const ObjPoint &x, std::span<const ObjPoint> set, const ObjPoint &r);

struct UhvValue {
    double hv = 0.0;
    double penalty = 0.0;
    double uhv = 0.0;
    std::size_t n_nondominated = 0;
};

UhvValue uhv(std::span<const ObjPoint> set, const ObjPoint &r);

// Greedy hypervolume subset selection; ties go to the lowest index.
std::vector<std::size_t> ghss(std::span<const ObjPoint> pts, const ObjPoint &r, std::size_t p);

} // namespace uhv
