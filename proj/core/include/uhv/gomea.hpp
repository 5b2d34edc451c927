#pragma once

#include <uhv/rng.hpp>
#include <uhv/types.hpp>

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace uhv
{

// Family of subsets over genotype indices; skipped subsets are never sampled.
struct Fos {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<char> skip;

    void add(std::vector<std::size_t> s, bool skipped = false)
    {
        subsets.push_back(std::move(s));
        skip.push_back(skipped ? 1 : 0);
    }
    std::size_t size() const { return subsets.size(); }
};

struct GomOptions {
    double tau = 0.35;
    double variance_floor = 1e-300;
    // Adaptive distribution multipliers with anticipated mean shift. Off
    // gives the plain loop: estimate, sample, keep strict improvements.
    bool multipliers = true;
    double eta_dec = 0.9;
    double eta_inc = 1.0 / 0.9;
    double sdr_threshold = 1.0;
    std::size_t max_no_improvement = 0; // 0: 25 + genotype dimension
    double ams_delta = 2.0;
    double ams_fraction = 0.5; // times tau
    // Members without improvement for more than max_no_improvement
    // generations are moved towards the elite.
    bool forced_improvements = true;
    // Out-of-bounds samples are redrawn from the model this many times
    // before the objective's own repair takes over.
    std::size_t max_resamples = 100;
};

enum class ModelMode { full, ledoit_wolf, diagonal };

struct GaussianModel {
    std::vector<std::size_t> subset;
    Eigen::VectorXd mean;
    Eigen::MatrixXd factor; // lower triangular, factor * factor^T = covariance
    ModelMode mode = ModelMode::full;
};

std::size_t selection_size(std::size_t n, double tau);

// Indices of the `count` largest fitness values; ties by lower index.
std::vector<std::size_t> select_top(std::span<const double> fitness, std::size_t count);

// Shrinkage intensity towards the diagonal of the sample covariance.
double ledoit_wolf_intensity(const Eigen::MatrixXd &centered);

// Maximum-likelihood Gaussian over the subset coordinates of the selected
// rows. Diagonal without decomposition when |subset| > tau * n_pop - 1;
// otherwise full, falling back to Ledoit-Wolf when use_lw is set or when the
// decomposition fails (which sets use_lw).
GaussianModel fit_model(const std::vector<Vector> &rows, std::span<const std::size_t> selection,
                        std::span<const std::size_t> subset, double tau, std::size_t n_pop, bool &use_lw,
                        double variance_floor = 1e-300);

// Overwrites the subset coordinates with mean + multiplier * factor * z (+ shift).
void sample_partial(const GaussianModel &m, std::span<double> genotype, Rng &rng, double multiplier = 1.0,
                    const Eigen::VectorXd *shift = nullptr);

// Objective seen by the engine. try_update is called after the subset
// coordinates of `member` changed (and may change them further, e.g. to
// repair); it returns the candidate fitness or nullopt when the evaluation
// budget is exhausted. Exactly one of accept/reject follows a returned value.
class GomObjective
{
public:
    virtual ~GomObjective() = default;
    virtual std::optional<double> try_update(std::size_t member, std::span<const std::size_t> subset,
                                             std::span<double> genotype) = 0;
    virtual void accept(std::size_t member) = 0;
    virtual void reject(std::size_t member) = 0;
    virtual bool in_bounds(std::span<const std::size_t>, std::span<const double>) const { return true; }
};

struct SubsetState {
    bool use_lw = false;
    double multiplier = 1.0;
    std::size_t no_improvement = 0;
    Eigen::VectorXd prev_mean;
};

// Largest absolute standardized deviation of `improved_mean` from the model.
double standard_deviation_ratio(const GaussianModel &m, const Eigen::VectorXd &improved_mean);
// Distribution multiplier update after one use of a model; sdr is empty when
// no sample improved on the elite.
void adapt_multiplier(SubsetState &st, const GomOptions &opts, std::optional<double> sdr);

// Gene-pool optimal mixing over a real-valued genotype, maximizing fitness.
class GomEngine
{
public:
    GomEngine(std::size_t pop_size, std::size_t dim, GomOptions opts = {});

    std::vector<Vector> &genotypes() { return rows_; }
    const std::vector<Vector> &genotypes() const { return rows_; }
    std::vector<double> &fitness() { return fitness_; }
    const std::vector<double> &fitness() const { return fitness_; }
    std::size_t pop_size() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }
    const GomOptions &options() const { return opts_; }

    // One pass over the FOS. Returns false when the objective ran out of
    // budget; the population is consistent either way.
    bool generation(const Fos &fos, GomObjective &obj, Rng &rng);

    std::size_t best() const;
    const std::map<std::vector<std::size_t>, SubsetState> &subset_states() const { return states_; }
    // Modes of the models built in the last generation, in FOS order.
    const std::vector<ModelMode> &last_modes() const { return last_modes_; }

private:
    bool forced_improvement(std::size_t member, std::size_t donor, const Fos &fos, GomObjective &obj);

    std::size_t dim_;
    GomOptions opts_;
    std::vector<Vector> rows_;
    std::vector<double> fitness_;
    std::map<std::vector<std::size_t>, SubsetState> states_;
    std::vector<ModelMode> last_modes_;
    std::vector<std::size_t> member_nis_;
};

} // namespace uhv
