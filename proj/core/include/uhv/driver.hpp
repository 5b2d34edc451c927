#pragma once

#include <uhv/archive.hpp>
#include <uhv/hypervolume.hpp>
#include <uhv/types.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace uhv
{

// State handed to a monitor at every generation boundary.
struct Snapshot {
    std::uint64_t fevals = 0;
    std::size_t generation = 0;
    int phase = 0;
    std::span<const ObjPoint> set; // objectives of the reported solution set S_p
    UhvValue value;                // indicator of that set
    const EliteArchive *archive = nullptr;
};

class RunMonitor
{
public:
    virtual ~RunMonitor() = default;
    // Return false to stop the run.
    virtual bool on_generation(const Snapshot &s) = 0;
};

struct RunResult {
    std::vector<Vector> set_x;
    std::vector<ObjPoint> set_f;
    UhvValue value;
    std::uint64_t fevals = 0;
    std::size_t generations = 0;
    bool converged = false;
    bool stopped = false; // by the monitor
    std::optional<std::uint64_t> switch_fevals;
};

} // namespace uhv
