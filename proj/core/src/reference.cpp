#include <uhv/reference.hpp>

#include <uhv/hypervolume.hpp>
#include <uhv/problems.hpp>

#include "detail.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#ifndef UHV_DEFAULT_DATA_DIR
#define UHV_DEFAULT_DATA_DIR "data"
#endif

namespace uhv
{

std::string data_dir()
{
    if (const char *env = std::getenv("UHV_DATA_DIR"); env && *env) return env;
    return UHV_DEFAULT_DATA_DIR;
}

namespace
{

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double to_double(const std::string &s)
{
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

std::string fmt(double v)
{
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

ObjPoint parse_ref_point(const std::string &s)
{
    auto parts = split(s, ':');
    if (parts.size() != 2) throw std::runtime_error("bad reference point '" + s + "'");
    return {to_double(parts[0]), to_double(parts[1])};
}

std::string ref_point_text(const ObjPoint &r) { return fmt(r[0]) + ":" + fmt(r[1]); }

} // namespace

ReferenceTable ReferenceTable::load(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open HV reference file " + path);
    ReferenceTable t;
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            if (line.rfind("problem,", 0) == 0) continue;
        }
        auto f = split(line, ',');
        if (f.size() != 5) throw std::runtime_error("malformed HV reference row: " + line);
        HvReference ref;
        ref.problem = f[0];
        ref.p = static_cast<std::size_t>(std::stoul(f[1]));
        ref.r = parse_ref_point(f[2]);
        ref.hv_star = to_double(f[3]);
        ref.provenance = f[4];
        t.entries_.push_back(std::move(ref));
    }
    return t;
}

ReferenceTable ReferenceTable::load_default() { return load(data_dir() + "/hv_reference.csv"); }

void ReferenceTable::save(const std::string &path) const
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# uhvopt hv-reference v1\n";
    out << "problem,p,r,hv_star,provenance\n";
    for (const auto &e : entries_)
        out << e.problem << ',' << e.p << ',' << ref_point_text(e.r) << ',' << fmt(e.hv_star) << ',' << e.provenance
            << '\n';
}

std::optional<HvReference> ReferenceTable::find(const std::string &problem, std::size_t n, std::size_t p,
                                                const ObjPoint &r) const
{
    const std::string keyed = problem + ":" + std::to_string(n);
    for (const auto &key : {keyed, problem})
        for (const auto &e : entries_)
            if (e.problem == key && e.p == p && e.r == r) return e;
    return std::nullopt;
}

void ReferenceTable::upsert(HvReference ref)
{
    for (auto &e : entries_)
        if (e.problem == ref.problem && e.p == ref.p && e.r == ref.r) {
            e = std::move(ref);
            return;
        }
    entries_.push_back(std::move(ref));
}

std::string reference_key(const std::string &problem, std::size_t n)
{
    if (problem == "sphere-Rosenbrock") return problem + ":" + std::to_string(n);
    return problem;
}

HvOptimum optimal_hv(const FrontCurve &curve, std::size_t p, const ObjPoint &r, std::size_t grid)
{
    if (p == 0) throw std::invalid_argument("optimal_hv: p must be positive");
    auto ts = curve.sample_parameters(grid);
    std::vector<double> t;
    std::vector<ObjPoint> y;
    for (double v : ts) {
        auto q = curve(v);
        if (inside(q, r)) {
            t.push_back(v);
            y.push_back(q);
        }
    }
    const std::size_t k = y.size();
    if (k == 0) return {};
    p = std::min(p, k);

    // dp[c][j]: best HV of c points with j the one of largest f1
    const double ninf = -std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> dp(p, std::vector<double>(k, ninf));
    std::vector<std::vector<std::size_t>> from(p, std::vector<std::size_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j) dp[0][j] = (r[0] - y[j][0]) * (r[1] - y[j][1]);
    for (std::size_t c = 1; c < p; ++c) {
        for (std::size_t j = c; j < k; ++j) {
            const double w = r[0] - y[j][0];
            double best = ninf;
            std::size_t arg = 0;
            for (std::size_t i = c - 1; i < j; ++i) {
                double v = dp[c - 1][i] + w * (y[i][1] - y[j][1]);
                if (v > best) {
                    best = v;
                    arg = i;
                }
            }
            dp[c][j] = best;
            from[c][j] = arg;
        }
    }
    std::size_t last = 0;
    for (std::size_t j = 0; j < k; ++j)
        if (dp[p - 1][j] > dp[p - 1][last]) last = j;
    std::vector<std::size_t> pick(p);
    for (std::size_t c = p; c-- > 0;) {
        pick[c] = last;
        last = from[c][last];
    }

    HvOptimum opt;
    std::vector<std::size_t> seg(p, 0);
    for (std::size_t c = 0; c < p; ++c) {
        opt.params.push_back(t[pick[c]]);
        for (std::size_t s = 0; s < curve.segments.size(); ++s)
            if (t[pick[c]] >= curve.segments[s].first && t[pick[c]] <= curve.segments[s].second) {
                seg[c] = s;
                break;
            }
    }
    opt.points.resize(p);
    for (std::size_t c = 0; c < p; ++c) opt.points[c] = curve(opt.params[c]);

    auto total = [&]() {
        double v = 0.0, prev = r[1];
        for (const auto &q : opt.points) {
            v += (r[0] - q[0]) * (prev - q[1]);
            prev = q[1];
        }
        return v;
    };
    double hv = total();
    for (int sweep = 0, quiet = 0; sweep < 20000 && quiet < 3; ++sweep) {
        for (std::size_t c = 0; c < p; ++c) {
            const double top = c > 0 ? opt.points[c - 1][1] : r[1];
            const double right = c + 1 < p ? opt.points[c + 1][0] : r[0];
            double lo = curve.segments[seg[c]].first, hi = curve.segments[seg[c]].second;
            if (c > 0 && seg[c - 1] == seg[c]) lo = opt.params[c - 1];
            if (c + 1 < p && seg[c + 1] == seg[c]) hi = opt.params[c + 1];
            auto neg = [&](double v) {
                auto q = curve(v);
                return -(std::max(0.0, right - q[0]) * std::max(0.0, top - q[1]));
            };
            double cand = detail::golden_min(neg, lo, hi, 1e-15);
            if (neg(cand) < neg(opt.params[c])) {
                opt.params[c] = cand;
                opt.points[c] = curve(cand);
            }
        }
        double nv = total();
        quiet = (nv - hv <= 1e-15) ? quiet + 1 : 0;
        hv = std::max(hv, nv);
    }
    opt.hv = hv2d(opt.points, r);
    return opt;
}

NicheIntervals niche_intervals(const std::string &problem)
{
    if (problem == "zdt3") return make_problem("zdt3:2")->front_curve().segments;
    if (problem == "zdt6") {
        auto f1 = [](double x) { return 1.0 - std::exp(-4.0 * x) * std::pow(std::sin(6.0 * std::numbers::pi * x), 6); };
        std::vector<double> m;
        for (int k = 1; k <= 6; ++k)
            m.push_back(f1(detail::golden_min(f1, (k - 1) / 6.0, k / 6.0)));
        NicheIntervals out;
        for (std::size_t k = 0; k < m.size(); ++k) out.emplace_back(m[k], k + 1 < m.size() ? m[k + 1] : 1.0);
        return out;
    }
    throw std::invalid_argument("no niche definition for problem '" + problem + "'");
}

NicheTable NicheTable::load(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open niche file " + path);
    NicheTable t;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("problem,", 0) == 0) continue;
        auto f = split(line, ',');
        if (f.size() != 4) throw std::runtime_error("malformed niche row: " + line);
        if (t.rows.empty() || t.rows.back().first != f[0]) t.rows.emplace_back(f[0], NicheIntervals{});
        t.rows.back().second.emplace_back(to_double(f[2]), to_double(f[3]));
    }
    return t;
}

void NicheTable::save(const std::string &path) const
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# uhvopt niches v1\n";
    out << "problem,niche,f1_lo,f1_hi\n";
    for (const auto &[name, iv] : rows)
        for (std::size_t k = 0; k < iv.size(); ++k)
            out << name << ',' << k + 1 << ',' << fmt(iv[k].first) << ',' << fmt(iv[k].second) << '\n';
}

const NicheIntervals *NicheTable::find(const std::string &problem) const
{
    for (const auto &[name, iv] : rows)
        if (name == problem) return &iv;
    return nullptr;
}

void rebuild_references(const std::string &dir)
{
    const ObjPoint r{11.0, 11.0};
    const std::vector<std::size_t> ps{1, 2, 3, 5, 9, 17, 33};
    const std::vector<std::string> problems{"bi-sphere",  "sphere-rotatedElli", "sphere-Rosenbrock:10", "zdt3",
                                            "zdt6",       "wfg1",               "wfg2",                 "wfg3",
                                            "wfg4",       "wfg5",               "wfg6",                 "wfg7",
                                            "wfg8",       "wfg9"};
    std::filesystem::create_directories(dir);
    ReferenceTable table;
    for (const auto &name : problems) {
        auto prob = make_problem(name);
        auto curve = prob->front_curve();
        for (auto p : ps) {
            auto opt = optimal_hv(curve, p, r);
            table.upsert({reference_key(prob->name(), prob->dim()), p, r, opt.hv, "front-optimal-subset"});
        }
    }
    table.save(dir + "/hv_reference.csv");

    NicheTable niches;
    for (const auto &name : {"zdt3", "zdt6"}) niches.rows.emplace_back(name, niche_intervals(name));
    niches.save(dir + "/niche_boundaries.csv");
}

} // namespace uhv
