#include <uhv/reference.hpp>
#include <uhv/runner.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char **argv)
{
    CLI::App app{"uncrowded hypervolume optimization harness"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "run repetitions of one configuration");
    std::string config_file;
    std::map<std::string, std::string> overrides;
    run->add_option("--config", config_file, "key=value config file")->check(CLI::ExistingFile);
    for (const char *key : {"algo", "problem", "p", "popsize", "linkage", "budget", "reps", "seed", "out", "r", "threads",
                            "target_dhv", "target_gd", "target_igd", "multipliers", "forced_improvements", "stop_at_target", "archive_size"})
        run->add_option(std::string("--") + key, overrides[key]);
    bool quiet = false;
    run->add_flag("-q,--quiet", quiet, "no per-seed log lines");

    auto *table = app.add_subcommand("table", "tabulate finished runs");
    std::vector<std::string> dirs;
    std::string metric = "hv";
    std::string table_csv;
    table->add_option("--dirs", dirs, "run directories")->required();
    table->add_option("--metric", metric)->check(CLI::IsMember({"hv", "fevals"}));
    table->add_option("--csv", table_csv, "also write the table as CSV");

    auto *refs = app.add_subcommand("refs", "reference data");
    bool rebuild = false;
    std::string data_dir = uhv::data_dir();
    refs->add_flag("--rebuild", rebuild, "recompute hv_star and niche tables")->required();
    refs->add_option("--dir", data_dir);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            uhv::ExperimentConfig cfg;
            if (!config_file.empty()) cfg = uhv::load_config(config_file);
            for (const auto &[k, v] : overrides)
                if (run->count("--" + k)) uhv::apply_setting(cfg, k, v);
            auto rows = uhv::run_experiment(cfg, quiet ? nullptr : &std::cerr);
            uhv::write_summary_csv(std::cout, cfg, rows);
        } else if (*table) {
            auto t = uhv::summarize_table(dirs, metric == "hv" ? uhv::TableMetric::hv : uhv::TableMetric::fevals);
            uhv::print_table(std::cout, t);
            if (!table_csv.empty()) {
                std::ofstream out(table_csv);
                if (!out) throw std::runtime_error("cannot write " + table_csv);
                uhv::write_table_csv(out, t);
            }
        } else if (*refs) {
            uhv::rebuild_references(data_dir);
            std::cout << "wrote references to " << data_dir << '\n';
        }
    } catch (const uhv::config_error &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
