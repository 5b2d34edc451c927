#include <uhv/archive.hpp>

#include <uhv/hypervolume.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uhv
{

EliteArchive::EliteArchive(ObjPoint r, std::size_t target_size) : r_(r), target_(target_size)
{
    if (target_ == 0) throw std::invalid_argument("archive target size must be positive");
}

std::vector<ObjPoint> EliteArchive::objectives() const
{
    std::vector<ObjPoint> out;
    out.reserve(entries_.size());
    for (const auto &e : entries_) out.push_back(e.f);
    return out;
}

std::array<std::int64_t, 2> EliteArchive::box(const ObjPoint &f, const Grid &g) const
{
    std::array<std::int64_t, 2> b{};
    for (int d = 0; d < 2; ++d)
        b[d] = g.width[d] > 0.0 ? static_cast<std::int64_t>(std::floor((f[d] - g.anchor[d]) / g.width[d])) : 0;
    return b;
}

InsertResult EliteArchive::insert(std::span<const double> x, const ObjPoint &f)
{
    if (!std::isfinite(f[0]) || !std::isfinite(f[1]) || !inside(f, r_)) return InsertResult::rejected;

    auto by_f1 = [](const ArchiveEntry &e, double v) { return e.f[0] < v; };
    auto up = std::upper_bound(entries_.begin(), entries_.end(), f[0],
                               [](double v, const ArchiveEntry &e) { return v < e.f[0]; });
    if (up != entries_.begin() && (up - 1)->f[1] <= f[1]) return InsertResult::rejected;

    auto first = std::lower_bound(entries_.begin(), entries_.end(), f[0], by_f1);
    auto last = first;
    while (last != entries_.end() && last->f[1] >= f[1]) ++last;
    const bool dominates_some = first != last;

    if (grid_ && !dominates_some) {
        // a box occupant that f does not dominate blocks the insert
        auto b = box(f, *grid_);
        double lo = grid_->anchor[0] + static_cast<double>(b[0]) * grid_->width[0];
        auto it = std::lower_bound(entries_.begin(), entries_.end(), lo - grid_->width[0], by_f1);
        for (; it != entries_.end() && it->f[0] < lo + 2.0 * grid_->width[0]; ++it) {
            if (box(it->f, *grid_) == b) return InsertResult::rejected;
        }
    }

    first = entries_.erase(first, last);
    entries_.insert(first, ArchiveEntry{Vector(x.begin(), x.end()), f, next_seq_++});
    if (entries_.size() >= target_) target_hit_ = true;
    if (entries_.size() > target_) rediscretize();
    return dominates_some ? InsertResult::dominated_replaced : InsertResult::accepted;
}

std::size_t EliteArchive::count_boxes(const Grid &g) const
{
    // f1-sorted and mutually non-dominated, so a box's entries are adjacent
    std::size_t count = 0;
    std::array<std::int64_t, 2> prev{};
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto b = box(entries_[i].f, g);
        if (i == 0 || b != prev) ++count;
        prev = b;
    }
    return count;
}

void EliteArchive::rediscretize()
{
    if (entries_.empty()) return;
    ObjPoint lo = entries_.front().f, hi = entries_.front().f;
    for (const auto &e : entries_) {
        for (int d = 0; d < 2; ++d) {
            lo[d] = std::min(lo[d], e.f[d]);
            hi[d] = std::max(hi[d], e.f[d]);
        }
    }
    auto make = [&](std::size_t nc) {
        Grid g{lo, {(hi[0] - lo[0]) / static_cast<double>(nc), (hi[1] - lo[1]) / static_cast<double>(nc)}, nc};
        return g;
    };
    // retained count grows with nc; find the largest nc that fits
    std::size_t a = 1, b = target_;
    if (count_boxes(make(b)) <= target_) {
        a = b;
    } else {
        while (b - a > 1) {
            std::size_t mid = a + (b - a) / 2;
            (count_boxes(make(mid)) <= target_ ? a : b) = mid;
        }
    }
    Grid g = make(a);

    // keep the first inserted entry of each box
    std::vector<ArchiveEntry> kept;
    kept.reserve(entries_.size());
    std::array<std::int64_t, 2> prev{};
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto bx = box(entries_[i].f, g);
        if (i == 0 || bx != prev) kept.push_back(std::move(entries_[i]));
        else if (entries_[i].seq < kept.back().seq) kept.back() = std::move(entries_[i]);
        prev = bx;
    }
    entries_ = std::move(kept);
    grid_ = g;
}

} // namespace uhv
