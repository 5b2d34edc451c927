#pragma once

#include <uhv/types.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace uhv
{

struct ArchiveEntry {
    Vector x;
    ObjPoint f;
    std::uint64_t seq = 0; // insertion order
};

enum class InsertResult { accepted, rejected, dominated_replaced };

// Elitist archive of mutually non-dominated points strictly inside r. Once
// the target size is exceeded the objective space is discretized into boxes
// anchored at the minimum corner, and a box holds at most one point.
class EliteArchive
{
public:
    explicit EliteArchive(ObjPoint r = {11.0, 11.0}, std::size_t target_size = 1000);

    InsertResult insert(std::span<const double> x, const ObjPoint &f);
    // Rebuilds the grid from the current entries. Widths are range / nc per
    // objective with nc the largest cell count (at most the target size)
    // whose rebuild keeps at most target_size entries.
    void rediscretize();

    // Entries sorted by f1 ascending (f2 descending).
    const std::vector<ArchiveEntry> &entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::size_t target_size() const { return target_; }
    const ObjPoint &ref() const { return r_; }
    bool discretized() const { return grid_.has_value(); }
    // True once the archive has reached its target size at least once.
    bool target_hit() const { return target_hit_; }
    std::vector<ObjPoint> objectives() const;

    struct Grid {
        ObjPoint anchor;
        ObjPoint width;
        std::size_t cells;
    };
    const std::optional<Grid> &grid() const { return grid_; }

private:
    std::array<std::int64_t, 2> box(const ObjPoint &f, const Grid &g) const;
    std::size_t count_boxes(const Grid &g) const;

    std::vector<ArchiveEntry> entries_;
    ObjPoint r_;
    std::size_t target_;
    std::optional<Grid> grid_;
    std::uint64_t next_seq_ = 0;
    bool target_hit_ = false;
};

} // namespace uhv
