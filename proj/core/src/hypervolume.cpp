#include <uhv/hypervolume.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace uhv
{

Dominance dominates(const ObjPoint &a, const ObjPoint &b)
{
    if (a[0] <= b[0] && a[1] <= b[1]) return (a[0] < b[0] || a[1] < b[1]) ? Dominance::strict : Dominance::weak;
    return Dominance::none;
}

bool strictly_dominates(const ObjPoint &a, const ObjPoint &b)
{
    return a[0] <= b[0] && a[1] <= b[1] && (a[0] < b[0] || a[1] < b[1]);
}

bool weakly_dominates(const ObjPoint &a, const ObjPoint &b) { return a[0] <= b[0] && a[1] <= b[1]; }

bool inside(const ObjPoint &y, const ObjPoint &r) { return y[0] < r[0] && y[1] < r[1]; }

std::vector<std::size_t> approximation_set(std::span<const ObjPoint> pts, const ObjPoint &r)
{
    std::vector<std::size_t> idx;
    idx.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (inside(pts[i], r)) idx.push_back(i);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto &pa = pts[a], &pb = pts[b];
        if (pa[0] != pb[0]) return pa[0] < pb[0];
        if (pa[1] != pb[1]) return pa[1] < pb[1];
        return a < b;
    });
    std::vector<std::size_t> out;
    double best = std::numeric_limits<double>::infinity();
    for (auto i : idx) {
        if (pts[i][1] < best) {
            out.push_back(i);
            best = pts[i][1];
        }
    }
    return out;
}

namespace
{

// Sweep over a front sorted by f1 ascending, f2 descending.
double sweep(const std::vector<ObjPoint> &front, const ObjPoint &r)
{
    double v = 0.0, prev = r[1];
    for (const auto &q : front) {
        v += (r[0] - q[0]) * (prev - q[1]);
        prev = q[1];
    }
    return v;
}

} // namespace

double hv2d(std::span<const ObjPoint> pts, const ObjPoint &r)
{
    return ApproxBoundary(pts, r).hv();
}

ApproxBoundary::ApproxBoundary(std::span<const ObjPoint> pts, const ObjPoint &r) : r_(r)
{
    auto ids = approximation_set(pts, r);
    front_.reserve(ids.size());
    for (auto i : ids) front_.push_back(pts[i]);
}

std::vector<ObjPoint> ApproxBoundary::corners() const
{
    std::vector<ObjPoint> c;
    c.reserve(front_.size() + 1);
    if (front_.empty()) {
        c.push_back(r_);
        return c;
    }
    c.push_back({front_.front()[0], r_[1]});
    for (std::size_t i = 0; i + 1 < front_.size(); ++i) c.push_back({front_[i + 1][0], front_[i][1]});
    c.push_back({r_[0], front_.back()[1]});
    return c;
}

double ApproxBoundary::hv() const { return sweep(front_, r_); }

bool ApproxBoundary::insert(const ObjPoint &y)
{
    if (!inside(y, r_)) return false;
    auto it = std::upper_bound(front_.begin(), front_.end(), y[0],
                               [](double v, const ObjPoint &q) { return v < q[0]; });
    if (it != front_.begin() && (it - 1)->at(1) <= y[1]) return false;
    auto first = std::lower_bound(front_.begin(), front_.end(), y[0],
                                  [](const ObjPoint &q, double v) { return q[0] < v; });
    auto last = first;
    while (last != front_.end() && (*last)[1] >= y[1]) ++last;
    first = front_.erase(first, last);
    front_.insert(first, y);
    return true;
}

double hvi2d(const ObjPoint &x, const ApproxBoundary &b)
{
    const auto &r = b.ref();
    if (!inside(x, r)) return 0.0;
    const auto &f = b.front();
    // last point with f1 <= x1 bounds the region from above
    auto up = std::upper_bound(f.begin(), f.end(), x[0], [](double v, const ObjPoint &q) { return v < q[0]; });
    double top = r[1];
    if (up != f.begin()) top = (up - 1)->at(1);
    if (top <= x[1]) return 0.0;
    // points with x1 < f1 and x2 < f2 < top are dominated by x; the first
    // point with f2 <= x2 bounds the region on the right
    double area = 0.0, cur = x[0], height = top - x[1];
    auto it = up;
    for (; it != f.end() && (*it)[1] > x[1]; ++it) {
        area += ((*it)[0] - cur) * height;
        cur = (*it)[0];
        height = (*it)[1] - x[1];
    }
    double right = (it != f.end()) ? (*it)[0] : r[0];
    area += (right - cur) * height;
    return area;
}

double uncrowded_distance(const ObjPoint &x, const ApproxBoundary &b)
{
    // distance to the closure of the non-dominated region inside r, which is
    // the union of the orthants below the staircase corners
    const auto &r = b.ref();
    const auto &f = b.front();
    auto orthant = [&](double c0, double c1) {
        double d0 = std::max(0.0, x[0] - c0), d1 = std::max(0.0, x[1] - c1);
        return d0 * d0 + d1 * d1;
    };
    if (f.empty()) return std::sqrt(orthant(r[0], r[1]));
    double best = orthant(f.front()[0], r[1]);
    for (std::size_t i = 0; i + 1 < f.size() && best > 0.0; ++i) best = std::min(best, orthant(f[i + 1][0], f[i][1]));
    best = std::min(best, orthant(r[0], f.back()[1]));
    return std::sqrt(best);
}

double uhvi(const ObjPoint &x, const ApproxBoundary &b) { return hvi2d(x, b) - uncrowded_distance(x, b); }

double uhvi(const ObjPoint &x, std::span<const ObjPoint> set, const ObjPoint &r)
{
    return uhvi(x, ApproxBoundary(set, r));
}

UhvValue uhv(std::span<const ObjPoint> set, const ObjPoint &r)
{
    UhvValue v;
    auto ids = approximation_set(set, r);
    std::vector<ObjPoint> front;
    front.reserve(ids.size());
    for (auto i : ids) front.push_back(set[i]);
    v.hv = sweep(front, r);
    v.n_nondominated = ids.size();
    if (ids.size() < set.size()) {
        std::vector<char> in_front(set.size(), 0);
        for (auto i : ids) in_front[i] = 1;
        ApproxBoundary b;
        b = ApproxBoundary(std::span<const ObjPoint>(front), r);
        std::vector<double> sq;
        sq.reserve(set.size() - ids.size());
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (in_front[i]) continue;
            double d = uncrowded_distance(set[i], b);
            sq.push_back(d * d);
        }
        // summation order fixed by value so the result is permutation invariant
        std::sort(sq.begin(), sq.end());
        double s = 0.0;
        for (double d : sq) s += d;
        v.penalty = s / static_cast<double>(set.size());
    }
    v.uhv = v.hv - v.penalty;
    return v;
}

std::vector<std::size_t> ghss(std::span<const ObjPoint> pts, const ObjPoint &r, std::size_t p)
{
    std::vector<std::size_t> sel;
    const std::size_t want = std::min(p, pts.size());
    sel.reserve(want);
    std::vector<char> used(pts.size(), 0);
    ApproxBoundary b(std::span<const ObjPoint>{}, r);
    while (sel.size() < want) {
        double best = -1.0;
        std::size_t arg = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (used[i]) continue;
            double v = hvi2d(pts[i], b);
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        used[arg] = 1;
        sel.push_back(arg);
        b.insert(pts[arg]);
    }
    return sel;
}

} // namespace uhv
