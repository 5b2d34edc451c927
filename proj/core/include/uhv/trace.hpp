#pragma once

#include <uhv/driver.hpp>
#include <uhv/front.hpp>
#include <uhv/metrics.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace uhv
{

inline constexpr int kTraceFormatVersion = 1;

struct TraceRow {
    std::uint64_t fevals = 0;
    double best_uhv = 0.0;
    double delta_hv = 0.0;
    double gd = 0.0;
    double igd = 0.0;
    std::size_t n_nondominated = 0;
    int phase = 0;
};

// Records one row per generation boundary at which the evaluation count grew.
// Metrics without a reference or oracle are NaN.
class TraceRecorder : public RunMonitor
{
public:
    TraceRecorder(ObjPoint r, std::optional<HvReference> ref, const FrontOracle *oracle);

    bool on_generation(const Snapshot &s) override;
    const std::vector<TraceRow> &rows() const { return rows_; }

    // Stop as soon as delta_hv drops below this value.
    void stop_below(double delta_hv) { stop_below_ = delta_hv; }

private:
    ObjPoint r_;
    std::optional<HvReference> ref_;
    const FrontOracle *oracle_;
    std::vector<TraceRow> rows_;
    std::optional<double> stop_below_;
};

std::string format_double(double v);
void write_trace_csv(std::ostream &out, const std::vector<TraceRow> &rows);
std::vector<TraceRow> read_trace_csv(std::istream &in);

} // namespace uhv
