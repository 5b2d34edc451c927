#include <uhv/trace.hpp>

#include <uhv/hypervolume.hpp>

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace uhv
{

TraceRecorder::TraceRecorder(ObjPoint r, std::optional<HvReference> ref, const FrontOracle *oracle)
    : r_(r), ref_(std::move(ref)), oracle_(oracle)
{
}

bool TraceRecorder::on_generation(const Snapshot &s)
{
    if (!rows_.empty() && s.fevals <= rows_.back().fevals) return true;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    TraceRow row;
    row.fevals = s.fevals;
    row.best_uhv = s.value.uhv;
    row.delta_hv = ref_ ? delta_hv(s.set, r_, *ref_) : nan;
    row.gd = oracle_ ? gd(s.set, r_, *oracle_) : nan;
    row.igd = nan;
    if (oracle_ && s.archive && !s.archive->empty()) row.igd = igd(s.archive->objectives(), *oracle_);
    row.n_nondominated = s.value.n_nondominated;
    row.phase = s.phase;
    rows_.push_back(row);
    return !(stop_below_ && row.delta_hv < *stop_below_);
}

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

void write_trace_csv(std::ostream &out, const std::vector<TraceRow> &rows)
{
    out << "# uhvopt trace v" << kTraceFormatVersion << "\n";
    out << "fevals,best_uhv,delta_hv,gd,igd,n_nondominated,phase\n";
    for (const auto &r : rows)
        out << r.fevals << ',' << format_double(r.best_uhv) << ',' << format_double(r.delta_hv) << ','
            << format_double(r.gd) << ',' << format_double(r.igd) << ',' << r.n_nondominated << ',' << r.phase << '\n';
}

namespace
{

double parse_field(const std::string &s)
{
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw std::runtime_error("bad trace field '" + s + "'");
    return v;
}

} // namespace

std::vector<TraceRow> read_trace_csv(std::istream &in)
{
    std::vector<TraceRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("fevals,", 0) == 0) continue;
        std::vector<std::string> f;
        std::istringstream is(line);
        std::string cell;
        while (std::getline(is, cell, ',')) f.push_back(cell);
        if (f.size() != 7) throw std::runtime_error("malformed trace row: " + line);
        TraceRow r;
        r.fevals = std::stoull(f[0]);
        r.best_uhv = parse_field(f[1]);
        r.delta_hv = parse_field(f[2]);
        r.gd = parse_field(f[3]);
        r.igd = parse_field(f[4]);
        r.n_nondominated = std::stoul(f[5]);
        r.phase = std::stoi(f[6]);
        rows.push_back(r);
    }
    return rows;
}

} // namespace uhv
