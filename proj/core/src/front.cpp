#include <uhv/front.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace uhv
{

double FrontCurve::total_length() const
{
    double len = 0.0;
    for (const auto &[a, b] : segments) len += b - a;
    return len;
}

std::vector<double> FrontCurve::sample_parameters(std::size_t k) const
{
    if (segments.empty()) throw std::invalid_argument("front curve has no segments");
    std::vector<double> ts;
    ts.reserve(k);
    if (k == 0) return ts;
    if (k == 1) {
        ts.push_back(segments.front().first);
        return ts;
    }
    const double len = total_length();
    std::size_t seg = 0;
    double offset = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        double s = len * static_cast<double>(i) / static_cast<double>(k - 1);
        while (seg + 1 < segments.size() && s > offset + (segments[seg].second - segments[seg].first)) {
            offset += segments[seg].second - segments[seg].first;
            ++seg;
        }
        double t = segments[seg].first + (s - offset);
        ts.push_back(std::min(t, segments[seg].second));
    }
    ts.back() = segments.back().second;
    return ts;
}

std::vector<ObjPoint> FrontCurve::sample(std::size_t k) const
{
    std::vector<ObjPoint> out;
    out.reserve(k);
    for (double t : sample_parameters(k)) out.push_back(map(t));
    return out;
}

NearestPoint::NearestPoint(std::vector<ObjPoint> pts)
{
    index_.resize(pts.size());
    std::iota(index_.begin(), index_.end(), std::size_t{0});
    std::stable_sort(index_.begin(), index_.end(),
                     [&](std::size_t a, std::size_t b) { return pts[a][0] < pts[b][0]; });
    pts_.reserve(pts.size());
    for (auto i : index_) pts_.push_back(pts[i]);
}

std::size_t NearestPoint::nearest_sorted(const ObjPoint &y, double &d2) const
{
    if (pts_.empty()) throw std::logic_error("nearest point query on an empty set");
    auto it = std::lower_bound(pts_.begin(), pts_.end(), y[0],
                               [](const ObjPoint &p, double v) { return p[0] < v; });
    std::size_t start = static_cast<std::size_t>(it - pts_.begin());
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    auto visit = [&](std::size_t i) {
        double dx = pts_[i][0] - y[0];
        double dy = pts_[i][1] - y[1];
        double d = dx * dx + dy * dy;
        if (d < best || (d == best && i < arg)) {
            best = d;
            arg = i;
        }
        return dx * dx;
    };
    for (std::size_t i = start; i < pts_.size(); ++i) {
        if (visit(i) > best) break;
    }
    for (std::size_t i = start; i-- > 0;) {
        if (visit(i) > best) break;
    }
    d2 = best;
    return arg;
}

std::size_t NearestPoint::nearest(const ObjPoint &y) const
{
    double d2;
    return index_[nearest_sorted(y, d2)];
}

double NearestPoint::distance(const ObjPoint &y) const
{
    double d2;
    nearest_sorted(y, d2);
    return std::sqrt(d2);
}

namespace
{

std::vector<ObjPoint> nondominated_sorted(std::vector<ObjPoint> pts)
{
    std::stable_sort(pts.begin(), pts.end(), [](const ObjPoint &a, const ObjPoint &b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    std::vector<ObjPoint> out;
    double best = std::numeric_limits<double>::infinity();
    for (const auto &p : pts) {
        if (p[1] < best) {
            out.push_back(p);
            best = p[1];
        }
    }
    return out;
}

double sqdist(const ObjPoint &a, const ObjPoint &b)
{
    double dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

} // namespace

FrontOracle FrontOracle::analytic(FrontCurve curve, std::size_t igd_samples)
{
    FrontOracle o;
    o.kind_ = Kind::analytic;
    o.curve_ = std::make_shared<const FrontCurve>(std::move(curve));
    const auto &c = *o.curve_;
    const double len = c.total_length();
    // roughly 4000 bracket points over the whole curve, at least 8 per segment
    std::vector<ObjPoint> grid;
    for (std::size_t s = 0; s < c.segments.size(); ++s) {
        auto [a, b] = c.segments[s];
        std::size_t m = std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(4000.0 * (b - a) / len)));
        for (std::size_t i = 0; i <= m; ++i) {
            double t = (i == m) ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(m);
            o.grid_t_.push_back(t);
            o.grid_seg_.push_back(s);
            grid.push_back(c(t));
        }
    }
    o.grid_ = NearestPoint(std::move(grid));
    o.samples_ = c.sample(igd_samples);
    o.sample_index_ = NearestPoint(o.samples_);
    return o;
}

FrontOracle FrontOracle::sampled(std::vector<ObjPoint> pts)
{
    if (pts.empty()) throw std::invalid_argument("sampled front oracle needs at least one point");
    FrontOracle o;
    o.kind_ = Kind::sampled;
    o.samples_ = nondominated_sorted(std::move(pts));
    o.sample_index_ = NearestPoint(o.samples_);
    return o;
}

double FrontOracle::distance(const ObjPoint &y) const
{
    if (kind_ == Kind::sampled) return sample_index_.distance(y);

    const auto &c = *curve_;
    std::size_t g = grid_.nearest(y);
    std::size_t seg = grid_seg_[g];
    double lo = (g > 0 && grid_seg_[g - 1] == seg) ? grid_t_[g - 1] : grid_t_[g];
    double hi = (g + 1 < grid_t_.size() && grid_seg_[g + 1] == seg) ? grid_t_[g + 1] : grid_t_[g];
    double best = sqdist(c(grid_t_[g]), y);

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = sqdist(c(x1), y), f2 = sqdist(c(x2), y);
    while (b - a > 1e-13) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = sqdist(c(x1), y);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = sqdist(c(x2), y);
        }
    }
    best = std::min({best, f1, f2, sqdist(c(lo), y), sqdist(c(hi), y)});
    return std::sqrt(best);
}

} // namespace uhv
