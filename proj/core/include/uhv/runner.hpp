#pragma once

#include <uhv/archive.hpp>
#include <uhv/driver.hpp>
#include <uhv/trace.hpp>
#include <uhv/uhv_gomea.hpp>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace uhv
{

enum class Algorithm { uhv_gomea, sofomore, mo_gomea, hybrid };

Algorithm parse_algorithm(const std::string &s);
std::string to_string(Algorithm a);

struct ExperimentConfig {
    std::string problem = "bi-sphere:10";
    Algorithm algo = Algorithm::uhv_gomea;
    Linkage linkage = Linkage::marginal;
    std::size_t p = 9;
    std::size_t pop_size = 31;
    ObjPoint r{11.0, 11.0};
    std::uint64_t budget = 1000000;
    std::size_t reps = 10;
    std::uint64_t seed = 1;
    double target_dhv = 1e-5;
    double target_gd = std::numeric_limits<double>::quiet_NaN();  // NaN: not tracked
    double target_igd = std::numeric_limits<double>::quiet_NaN(); // NaN: not tracked
    std::string out_dir;                                           // empty: write nothing
    std::size_t threads = 1;
    std::size_t archive_size = 1000;
    bool multipliers = true;
    bool forced_improvements = true;
    bool stop_at_target = false; // end a run once delta_hv < target_dhv
    double convergence_std = 1e-20;

    // Label used in tables, e.g. "uhv-gomea-lt".
    std::string label() const;
    void validate() const;
};

// key=value setting; throws config_error on unknown keys or bad values.
void apply_setting(ExperimentConfig &cfg, const std::string &key, const std::string &value);
// '#' comments and blank lines ignored.
ExperimentConfig parse_config(std::istream &in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string &path, ExperimentConfig base = {});
std::vector<std::pair<std::string, std::string>> config_settings(const ExperimentConfig &cfg);

struct SeedOutcome {
    std::uint64_t seed = 0;
    RunResult result;
    std::vector<TraceRow> trace;
    std::vector<ArchiveEntry> archive;
    std::uint64_t eval_count = 0; // problem counter at the end
};

struct SeedSummary {
    std::uint64_t seed = 0;
    std::uint64_t fevals = 0;
    double final_uhv = 0.0, final_hv = 0.0, final_delta_hv = 0.0, final_gd = 0.0, final_igd = 0.0;
    std::size_t n_nondominated = 0;
    std::optional<std::uint64_t> fevals_to_dhv, fevals_to_gd, fevals_to_igd, switch_fevals;
    bool converged = false;
};

// One repetition with its own problem instance, archive and generator.
SeedOutcome run_single(const ExperimentConfig &cfg, std::uint64_t seed);
SeedSummary summarize_seed(const ExperimentConfig &cfg, const SeedOutcome &o);

// Runs seeds base .. base + reps - 1 (in worker threads when threads > 1),
// writing trace/archive/final files per seed and summary.csv into out_dir.
std::vector<SeedSummary> run_experiment(const ExperimentConfig &cfg, std::ostream *log = nullptr);

void write_summary_csv(std::ostream &out, const ExperimentConfig &cfg, const std::vector<SeedSummary> &rows);

struct SummaryFile {
    std::map<std::string, std::string> config;
    std::vector<SeedSummary> rows;
};
SummaryFile read_summary_csv(std::istream &in);

enum class TableMetric { hv, fevals };

struct TableCell {
    std::string problem;
    std::string algorithm;
    std::size_t runs = 0;
    double sr = 0.0;
    double mean = std::numeric_limits<double>::quiet_NaN();
    double sd = std::numeric_limits<double>::quiet_NaN();
    double rank = std::numeric_limits<double>::quiet_NaN();
    bool bold = false;
    double p_value = std::numeric_limits<double>::quiet_NaN();
};

struct Table {
    TableMetric metric = TableMetric::hv;
    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    std::vector<TableCell> cells;
    std::map<std::string, double> mean_rank;
    std::vector<std::string> missing;

    const TableCell *cell(const std::string &problem, const std::string &algorithm) const;
};

// hv: mean/sd of final HV, ranks by mean HV (higher is better).
// fevals: SR at the delta-HV target and mean/sd of fevals-to-target / p over
// successes, ranked by SR then mean. Bold marks the best and every result
// not significantly different from it (rank-sum, alpha = 0.05).
Table summarize_table(const std::vector<std::string> &dirs, TableMetric metric);
void print_table(std::ostream &out, const Table &t);
void write_table_csv(std::ostream &out, const Table &t);

} // namespace uhv
