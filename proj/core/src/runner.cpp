#include <uhv/runner.hpp>

#include <uhv/mo_gomea.hpp>
#include <uhv/problems.hpp>
#include <uhv/reference.hpp>
#include <uhv/sofomore.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace uhv
{

Algorithm parse_algorithm(const std::string &s)
{
    if (s == "uhv-gomea") return Algorithm::uhv_gomea;
    if (s == "sofomore") return Algorithm::sofomore;
    if (s == "mo-gomea") return Algorithm::mo_gomea;
    if (s == "hybrid") return Algorithm::hybrid;
    throw config_error("unknown algorithm '" + s + "' (expected uhv-gomea, sofomore, mo-gomea or hybrid)");
}

std::string to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::uhv_gomea: return "uhv-gomea";
    case Algorithm::sofomore: return "sofomore";
    case Algorithm::mo_gomea: return "mo-gomea";
    case Algorithm::hybrid: return "hybrid";
    }
    return "?";
}

std::string ExperimentConfig::label() const
{
    if (algo == Algorithm::uhv_gomea || algo == Algorithm::hybrid) return to_string(algo) + "-" + to_string(linkage);
    return to_string(algo);
}

void ExperimentConfig::validate() const
{
    if (budget == 0) throw config_error("budget must be positive");
    if (reps == 0) throw config_error("reps must be at least 1");
    if (p == 0) throw config_error("p must be positive");
    if (pop_size < 2) throw config_error("popsize must be at least 2");
    if (algo == Algorithm::hybrid && linkage == Linkage::full) throw config_error("hybrid supports linkage lm or lt");
    if (static_cast<std::uint64_t>(p) * pop_size > budget)
        throw config_error("budget " + std::to_string(budget) + " cannot cover the initial " + std::to_string(p * pop_size)
                           + " evaluations");
    if (threads == 0) throw config_error("threads must be at least 1");
    parse_problem_spec(problem);
}

namespace
{

template <class T> T parse_number(const std::string &key, const std::string &v)
{
    T out{};
    const char *b = v.data(), *e = v.data() + v.size();
    std::from_chars_result res;
    if constexpr (std::is_floating_point_v<T>) {
        if (v == "nan" || v == "none" || v.empty()) return std::numeric_limits<T>::quiet_NaN();
        res = std::from_chars(b, e, out);
    } else {
        // accept 1e6 style integers
        double d = 0.0;
        res = std::from_chars(b, e, d);
        if (res.ec == std::errc() && res.ptr == e) {
            if (d < 0 || d != std::floor(d)) throw config_error("value of '" + key + "' must be a non-negative integer");
            return static_cast<T>(d);
        }
    }
    if (res.ec != std::errc() || res.ptr != e) throw config_error("bad value '" + v + "' for '" + key + "'");
    return out;
}

bool parse_bool(const std::string &key, const std::string &v)
{
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw config_error("bad boolean '" + v + "' for '" + key + "'");
}

std::string trim(const std::string &s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt_opt(const std::optional<std::uint64_t> &v) { return v ? std::to_string(*v) : "-"; }

} // namespace

void apply_setting(ExperimentConfig &cfg, const std::string &key, const std::string &value)
{
    const std::string v = trim(value);
    try {
        if (key == "problem") cfg.problem = v;
        else if (key == "algo") cfg.algo = parse_algorithm(v);
        else if (key == "linkage") cfg.linkage = parse_linkage(v);
        else if (key == "p") cfg.p = parse_number<std::size_t>(key, v);
        else if (key == "popsize" || key == "N") cfg.pop_size = parse_number<std::size_t>(key, v);
        else if (key == "r") {
            auto sep = v.find_first_of(":,");
            if (sep == std::string::npos) throw config_error("reference point must look like 11:11");
            cfg.r = {parse_number<double>(key, v.substr(0, sep)), parse_number<double>(key, v.substr(sep + 1))};
        }
        else if (key == "budget") cfg.budget = parse_number<std::uint64_t>(key, v);
        else if (key == "reps") cfg.reps = parse_number<std::size_t>(key, v);
        else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, v);
        else if (key == "target_dhv") cfg.target_dhv = parse_number<double>(key, v);
        else if (key == "target_gd") cfg.target_gd = parse_number<double>(key, v);
        else if (key == "target_igd") cfg.target_igd = parse_number<double>(key, v);
        else if (key == "out") cfg.out_dir = v;
        else if (key == "threads") cfg.threads = parse_number<std::size_t>(key, v);
        else if (key == "archive_size") cfg.archive_size = parse_number<std::size_t>(key, v);
        else if (key == "multipliers") cfg.multipliers = parse_bool(key, v);
        else if (key == "forced_improvements") cfg.forced_improvements = parse_bool(key, v);
        else if (key == "stop_at_target") cfg.stop_at_target = parse_bool(key, v);
        else if (key == "convergence_std") cfg.convergence_std = parse_number<double>(key, v);
        else throw config_error("unknown setting '" + key + "'");
    } catch (const config_error &) {
        throw;
    } catch (const std::exception &e) {
        throw config_error(key + ": " + e.what());
    }
}

ExperimentConfig parse_config(std::istream &in, ExperimentConfig base)
{
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw config_error("line " + std::to_string(lineno) + ": expected key=value");
        apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

ExperimentConfig load_config(const std::string &path, ExperimentConfig base)
{
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file " + path);
    return parse_config(in, std::move(base));
}

std::vector<std::pair<std::string, std::string>> config_settings(const ExperimentConfig &c)
{
    return {{"problem", c.problem},
            {"algo", to_string(c.algo)},
            {"linkage", to_string(c.linkage)},
            {"label", c.label()},
            {"p", std::to_string(c.p)},
            {"popsize", std::to_string(c.pop_size)},
            {"r", format_double(c.r[0]) + ":" + format_double(c.r[1])},
            {"budget", std::to_string(c.budget)},
            {"reps", std::to_string(c.reps)},
            {"seed", std::to_string(c.seed)},
            {"target_dhv", format_double(c.target_dhv)},
            {"target_gd", format_double(c.target_gd)},
            {"target_igd", format_double(c.target_igd)},
            {"archive_size", std::to_string(c.archive_size)},
            {"multipliers", c.multipliers ? "true" : "false"},
            {"forced_improvements", c.forced_improvements ? "true" : "false"},
            {"stop_at_target", c.stop_at_target ? "true" : "false"}};
}

SeedOutcome run_single(const ExperimentConfig &cfg, std::uint64_t seed)
{
    cfg.validate();
    auto problem = make_problem(cfg.problem);
    auto rng = make_rng(seed);
    EliteArchive archive(cfg.r, cfg.archive_size);

    std::optional<HvReference> ref;
    try {
        ref = ReferenceTable::load_default().find(problem->name(), problem->dim(), cfg.p, cfg.r);
    } catch (const std::runtime_error &) {
        ref.reset();
    }
    const FrontOracle oracle = problem->front_oracle(5000);
    TraceRecorder rec(cfg.r, ref, &oracle);
    if (cfg.stop_at_target && ref && !std::isnan(cfg.target_dhv)) rec.stop_below(cfg.target_dhv);

    GomOptions gom;
    gom.multipliers = cfg.multipliers;
    gom.forced_improvements = cfg.forced_improvements;

    SeedOutcome out;
    out.seed = seed;
    switch (cfg.algo) {
    case Algorithm::uhv_gomea: {
        UhvGomeaConfig c;
        c.p = cfg.p;
        c.pop_size = cfg.pop_size;
        c.linkage = cfg.linkage;
        c.r = cfg.r;
        c.budget = cfg.budget;
        c.gom = gom;
        c.convergence_std = cfg.convergence_std;
        out.result = uhv_gomea_run(*problem, c, rng, archive, &rec);
        break;
    }
    case Algorithm::sofomore: {
        SofomoreConfig c{cfg.p, cfg.pop_size, cfg.r, cfg.budget, gom, cfg.convergence_std};
        out.result = sofomore_run(*problem, c, rng, archive, &rec);
        break;
    }
    case Algorithm::mo_gomea: {
        MoGomeaConfig c{cfg.p, cfg.pop_size, cfg.r, cfg.budget, gom};
        out.result = mo_gomea_run(*problem, c, rng, archive, &rec);
        break;
    }
    case Algorithm::hybrid: {
        HybridConfig c;
        c.p = cfg.p;
        c.pop_size = cfg.pop_size;
        c.linkage = cfg.linkage;
        c.r = cfg.r;
        c.budget = cfg.budget;
        c.gom = gom;
        c.convergence_std = cfg.convergence_std;
        out.result = hybrid_run(*problem, c, rng, archive, &rec);
        break;
    }
    }
    out.trace = rec.rows();
    out.archive = archive.entries();
    out.eval_count = problem->eval_count();
    return out;
}

SeedSummary summarize_seed(const ExperimentConfig &cfg, const SeedOutcome &o)
{
    SeedSummary s;
    s.seed = o.seed;
    s.fevals = o.result.fevals;
    s.final_uhv = o.result.value.uhv;
    s.final_hv = o.result.value.hv;
    s.n_nondominated = o.result.value.n_nondominated;
    s.switch_fevals = o.result.switch_fevals;
    s.converged = o.result.converged;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    s.final_delta_hv = o.trace.empty() ? nan : o.trace.back().delta_hv;
    s.final_gd = o.trace.empty() ? nan : o.trace.back().gd;
    s.final_igd = o.trace.empty() ? nan : o.trace.back().igd;
    for (const auto &row : o.trace) {
        if (!s.fevals_to_dhv && !std::isnan(cfg.target_dhv) && row.delta_hv < cfg.target_dhv) s.fevals_to_dhv = row.fevals;
        if (!s.fevals_to_gd && !std::isnan(cfg.target_gd) && row.gd < cfg.target_gd) s.fevals_to_gd = row.fevals;
        if (!s.fevals_to_igd && !std::isnan(cfg.target_igd) && row.igd < cfg.target_igd) s.fevals_to_igd = row.fevals;
    }
    return s;
}

namespace
{

void write_points(const std::string &path, const std::vector<Vector> &xs, const std::vector<ObjPoint> &fs, std::size_t n)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# uhvopt points v1\n";
    for (std::size_t i = 0; i < n; ++i) out << "x_" << i + 1 << ',';
    out << "f_1,f_2\n";
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (double v : xs[k]) out << format_double(v) << ',';
        out << format_double(fs[k][0]) << ',' << format_double(fs[k][1]) << '\n';
    }
}

struct Stats {
    double mean = std::numeric_limits<double>::quiet_NaN(), sd = std::numeric_limits<double>::quiet_NaN();
    double min = std::numeric_limits<double>::quiet_NaN(), max = std::numeric_limits<double>::quiet_NaN();
};

Stats stats(const std::vector<double> &v)
{
    Stats s;
    if (v.empty()) return s;
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double q = 0.0;
    for (double x : v) q += (x - s.mean) * (x - s.mean);
    s.sd = v.size() > 1 ? std::sqrt(q / static_cast<double>(v.size() - 1)) : 0.0;
    s.min = *std::min_element(v.begin(), v.end());
    s.max = *std::max_element(v.begin(), v.end());
    return s;
}

} // namespace

void write_summary_csv(std::ostream &out, const ExperimentConfig &cfg, const std::vector<SeedSummary> &rows)
{
    out << "# uhvopt summary v1\n";
    for (const auto &[k, v] : config_settings(cfg)) out << "# config " << k << '=' << v << '\n';
    out << "seed,fevals,final_uhv,final_hv,final_delta_hv,final_gd,final_igd,n_nondominated,fevals_to_dhv,"
           "fevals_to_gd,fevals_to_igd,switch_fevals,converged\n";
    for (const auto &r : rows)
        out << r.seed << ',' << r.fevals << ',' << format_double(r.final_uhv) << ',' << format_double(r.final_hv) << ','
            << format_double(r.final_delta_hv) << ',' << format_double(r.final_gd) << ','
            << format_double(r.final_igd) << ',' << r.n_nondominated << ',' << fmt_opt(r.fevals_to_dhv) << ','
            << fmt_opt(r.fevals_to_gd) << ',' << fmt_opt(r.fevals_to_igd) << ',' << fmt_opt(r.switch_fevals) << ','
            << (r.converged ? 1 : 0) << '\n';

    auto agg = [&](const char *name, auto member, double target) {
        if (std::isnan(target)) return;
        std::vector<double> hits;
        for (const auto &r : rows)
            if ((r.*member)) hits.push_back(static_cast<double>(*(r.*member)));
        auto st = stats(hits);
        out << "# aggregate " << name << " target=" << format_double(target)
            << " sr=" << format_double(static_cast<double>(hits.size()) / static_cast<double>(rows.size()))
            << " mean_fevals=" << format_double(st.mean) << " min_fevals=" << format_double(st.min)
            << " max_fevals=" << format_double(st.max) << '\n';
    };
    agg("dhv", &SeedSummary::fevals_to_dhv, cfg.target_dhv);
    agg("gd", &SeedSummary::fevals_to_gd, cfg.target_gd);
    agg("igd", &SeedSummary::fevals_to_igd, cfg.target_igd);
    auto final_stat = [&](const char *name, auto member) {
        std::vector<double> v;
        for (const auto &r : rows)
            if (!std::isnan(r.*member)) v.push_back(r.*member);
        auto st = stats(v);
        out << "# aggregate " << name << " mean=" << format_double(st.mean) << " sd=" << format_double(st.sd)
            << " min=" << format_double(st.min) << " max=" << format_double(st.max) << '\n';
    };
    final_stat("final_hv", &SeedSummary::final_hv);
    final_stat("final_delta_hv", &SeedSummary::final_delta_hv);
    final_stat("final_gd", &SeedSummary::final_gd);
    final_stat("final_igd", &SeedSummary::final_igd);
    out << "# note repetitions=" << rows.size() << " (shaded bands in figures are min/max over these)\n";
}

std::vector<SeedSummary> run_experiment(const ExperimentConfig &cfg, std::ostream *log)
{
    cfg.validate();
    if (!cfg.out_dir.empty()) std::filesystem::create_directories(cfg.out_dir);
    const std::size_t reps = cfg.reps;
    std::vector<SeedSummary> rows(reps);
    std::vector<std::exception_ptr> errors(reps);
    std::atomic<std::size_t> next{0};
    std::mutex log_mtx;

    auto worker = [&]() {
        for (std::size_t k = next++; k < reps; k = next++) {
            const std::uint64_t seed = cfg.seed + k;
            try {
                auto o = run_single(cfg, seed);
                rows[k] = summarize_seed(cfg, o);
                if (!cfg.out_dir.empty()) {
                    const auto dir = std::filesystem::path(cfg.out_dir);
                    {
                        std::ofstream t(dir / ("trace_" + std::to_string(seed) + ".csv"));
                        write_trace_csv(t, o.trace);
                    }
                    const std::size_t n = make_problem(cfg.problem)->dim();
                    std::vector<Vector> xs;
                    std::vector<ObjPoint> fs;
                    for (const auto &e : o.archive) {
                        xs.push_back(e.x);
                        fs.push_back(e.f);
                    }
                    write_points((dir / ("archive_" + std::to_string(seed) + ".csv")).string(), xs, fs, n);
                    write_points((dir / ("final_" + std::to_string(seed) + ".csv")).string(), o.result.set_x,
                                 o.result.set_f, n);
                }
                if (log) {
                    std::lock_guard lock(log_mtx);
                    *log << cfg.label() << " " << cfg.problem << " seed " << seed << ": fevals " << rows[k].fevals
                         << " delta_hv " << format_double(rows[k].final_delta_hv) << " gd "
                         << format_double(rows[k].final_gd) << '\n';
                }
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const std::size_t nt = std::min(cfg.threads, reps);
    if (nt <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);

    if (!cfg.out_dir.empty()) {
        std::ofstream s(std::filesystem::path(cfg.out_dir) / "summary.csv");
        write_summary_csv(s, cfg, rows);
    }
    return rows;
}

SummaryFile read_summary_csv(std::istream &in)
{
    SummaryFile sf;
    std::string line;
    auto opt = [](const std::string &s) -> std::optional<std::uint64_t> {
        if (s == "-" || s.empty()) return std::nullopt;
        return std::stoull(s);
    };
    auto num = [](const std::string &s) {
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        return std::stod(s);
    };
    while (std::getline(in, line)) {
        if (line.rfind("# config ", 0) == 0) {
            auto kv = line.substr(9);
            auto eq = kv.find('=');
            if (eq != std::string::npos) sf.config[kv.substr(0, eq)] = kv.substr(eq + 1);
            continue;
        }
        if (line.empty() || line[0] == '#' || line.rfind("seed,", 0) == 0) continue;
        std::vector<std::string> f;
        std::istringstream is(line);
        std::string cell;
        while (std::getline(is, cell, ',')) f.push_back(cell);
        if (f.size() != 13) throw std::runtime_error("malformed summary row: " + line);
        SeedSummary r;
        r.seed = std::stoull(f[0]);
        r.fevals = std::stoull(f[1]);
        r.final_uhv = num(f[2]);
        r.final_hv = num(f[3]);
        r.final_delta_hv = num(f[4]);
        r.final_gd = num(f[5]);
        r.final_igd = num(f[6]);
        r.n_nondominated = std::stoul(f[7]);
        r.fevals_to_dhv = opt(f[8]);
        r.fevals_to_gd = opt(f[9]);
        r.fevals_to_igd = opt(f[10]);
        r.switch_fevals = opt(f[11]);
        r.converged = f[12] == "1";
        sf.rows.push_back(r);
    }
    return sf;
}

const TableCell *Table::cell(const std::string &problem, const std::string &algorithm) const
{
    for (const auto &c : cells)
        if (c.problem == problem && c.algorithm == algorithm) return &c;
    return nullptr;
}

Table summarize_table(const std::vector<std::string> &dirs, TableMetric metric)
{
    Table t;
    t.metric = metric;
    struct Group {
        std::string problem, algorithm;
        std::vector<double> sample; // compared by rank-sum; larger is better
        TableCell cell;
    };
    std::vector<Group> groups;
    for (const auto &d : dirs) {
        std::ifstream in(std::filesystem::path(d) / "summary.csv");
        if (!in) {
            t.missing.push_back(d);
            continue;
        }
        auto sf = read_summary_csv(in);
        Group g;
        g.problem = sf.config.count("problem") ? sf.config["problem"] : d;
        g.algorithm = sf.config.count("label") ? sf.config["label"] : d;
        const double p = sf.config.count("p") ? std::stod(sf.config["p"]) : 1.0;
        g.cell.problem = g.problem;
        g.cell.algorithm = g.algorithm;
        g.cell.runs = sf.rows.size();
        if (sf.rows.empty()) {
            t.missing.push_back(d);
            continue;
        }
        std::vector<double> vals;
        std::size_t hits = 0;
        for (const auto &r : sf.rows) {
            if (metric == TableMetric::hv) {
                vals.push_back(r.final_hv);
                g.sample.push_back(r.final_hv);
            } else if (r.fevals_to_dhv) {
                ++hits;
                vals.push_back(static_cast<double>(*r.fevals_to_dhv) / p);
                g.sample.push_back(-static_cast<double>(*r.fevals_to_dhv) / p);
            } else {
                g.sample.push_back(-std::numeric_limits<double>::infinity());
            }
        }
        g.cell.sr = metric == TableMetric::hv ? 1.0 : static_cast<double>(hits) / static_cast<double>(sf.rows.size());
        auto st = stats(vals);
        g.cell.mean = st.mean;
        g.cell.sd = st.sd;
        if (std::find(t.problems.begin(), t.problems.end(), g.problem) == t.problems.end()) t.problems.push_back(g.problem);
        if (std::find(t.algorithms.begin(), t.algorithms.end(), g.algorithm) == t.algorithms.end())
            t.algorithms.push_back(g.algorithm);
        groups.push_back(std::move(g));
    }

    // score: larger is better
    auto score = [&](const Group &g) {
        if (metric == TableMetric::hv) return std::make_pair(g.cell.mean, 0.0);
        return std::make_pair(g.cell.sr, std::isnan(g.cell.mean) ? -std::numeric_limits<double>::infinity() : -g.cell.mean);
    };
    std::map<std::string, std::vector<double>> ranks_by_algo;
    for (const auto &prob : t.problems) {
        std::vector<Group *> gs;
        for (auto &g : groups)
            if (g.problem == prob) gs.push_back(&g);
        std::sort(gs.begin(), gs.end(), [&](Group *a, Group *b) { return score(*a) > score(*b); });
        for (std::size_t i = 0; i < gs.size();) {
            std::size_t j = i;
            while (j < gs.size() && score(*gs[j]) == score(*gs[i])) ++j;
            const double avg = 0.5 * static_cast<double>(i + 1 + j);
            for (std::size_t k = i; k < j; ++k) gs[k]->cell.rank = avg;
            i = j;
        }
        for (auto *g : gs) {
            if (g == gs.front()) {
                g->cell.bold = true;
                continue;
            }
            auto rs = rank_sum_test(g->sample, gs.front()->sample);
            g->cell.p_value = rs.p_value;
            g->cell.bold = !rs.significant || score(*g) == score(*gs.front());
        }
        for (auto *g : gs) ranks_by_algo[g->algorithm].push_back(g->cell.rank);
    }
    for (auto &[a, rs] : ranks_by_algo) t.mean_rank[a] = std::accumulate(rs.begin(), rs.end(), 0.0) / static_cast<double>(rs.size());
    for (auto &g : groups) t.cells.push_back(g.cell);
    return t;
}

namespace
{

std::string sci(double v)
{
    if (std::isnan(v)) return "-";
    std::ostringstream os;
    os << std::setprecision(3) << std::scientific << v;
    return os.str();
}

std::string fixed(double v, int prec)
{
    if (std::isnan(v)) return "-";
    std::ostringstream os;
    os << std::setprecision(prec) << std::fixed << v;
    return os.str();
}

} // namespace

void print_table(std::ostream &out, const Table &t)
{
    out << std::left << std::setw(22) << "problem";
    for (const auto &a : t.algorithms) out << std::setw(34) << a;
    out << '\n';
    for (const auto &p : t.problems) {
        out << std::setw(22) << p;
        for (const auto &a : t.algorithms) {
            const auto *c = t.cell(p, a);
            std::string s = "n/a";
            if (c) {
                if (t.metric == TableMetric::hv)
                    s = fixed(c->mean, 4) + " +- " + sci(c->sd) + " (" + fixed(c->rank, 1) + ")";
                else
                    s = fixed(c->sr, 2) + " " + (c->sr > 0 ? sci(c->mean) + " +- " + sci(c->sd) : std::string("-"));
                if (c->bold) s = "*" + s + "*";
            }
            out << std::setw(34) << s;
        }
        out << '\n';
    }
    out << std::setw(22) << "mean rank";
    for (const auto &a : t.algorithms) {
        auto it = t.mean_rank.find(a);
        out << std::setw(34) << (it == t.mean_rank.end() ? std::string("-") : fixed(it->second, 2));
    }
    out << '\n';
    for (const auto &m : t.missing) out << "missing: " << m << '\n';
}

void write_table_csv(std::ostream &out, const Table &t)
{
    out << "# uhvopt table v1 metric=" << (t.metric == TableMetric::hv ? "hv" : "fevals") << '\n';
    out << "problem,algorithm,runs,sr,mean,sd,rank,bold,p_value\n";
    for (const auto &c : t.cells)
        out << c.problem << ',' << c.algorithm << ',' << c.runs << ',' << format_double(c.sr) << ','
            << format_double(c.mean) << ',' << format_double(c.sd) << ',' << format_double(c.rank) << ','
            << (c.bold ? 1 : 0) << ',' << format_double(c.p_value) << '\n';
    for (const auto &[a, r] : t.mean_rank) out << "# mean_rank " << a << '=' << format_double(r) << '\n';
}

} // namespace uhv
