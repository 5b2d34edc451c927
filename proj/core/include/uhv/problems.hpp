#pragma once

#include <uhv/front.hpp>
#include <uhv/rng.hpp>
#include <uhv/types.hpp>

#include <cstdint>
#include <memory>
#include <span>
#include <string>

namespace uhv
{

// Bi-objective minimization problem with an evaluation counter.
class Problem
{
public:
    virtual ~Problem() = default;

    const std::string &name() const { return name_; }
    std::size_t dim() const { return n_; }
    static constexpr std::size_t num_objectives() { return 2; }

    bool bounded() const { return !lower_.empty(); }
    const Vector &lower() const { return lower_; }
    const Vector &upper() const { return upper_; }
    const Vector &init_lower() const { return init_lower_; }
    const Vector &init_upper() const { return init_upper_; }

    std::uint64_t eval_count() const { return evals_; }

    // Counted evaluation. Throws std::invalid_argument on a length mismatch
    // and std::domain_error on an out-of-box point of a bounded problem.
    ObjPoint evaluate(std::span<const double> x);

    bool in_bounds(std::span<const double> x) const;
    // Whole-vector uniform resampling in the init box when x is out of
    // bounds. Returns true when x was replaced.
    bool repair(std::span<double> x, Rng &rng) const;
    Vector sample_init(Rng &rng) const;
    void sample_init(std::span<double> x, Rng &rng) const;

    // Parametric Pareto front, f1 increasing along the parameter.
    virtual FrontCurve front_curve() const = 0;
    // Analytic oracle for the bi-sphere family, k front samples otherwise.
    virtual FrontOracle front_oracle(std::size_t k = 5000) const;

protected:
    Problem(std::string name, std::size_t n, Vector init_lower, Vector init_upper,
            Vector lower = {}, Vector upper = {});
    virtual ObjPoint compute(std::span<const double> x) const = 0;

private:
    std::string name_;
    std::size_t n_;
    Vector init_lower_, init_upper_, lower_, upper_;
    std::uint64_t evals_ = 0;
};

struct ProblemSpec {
    std::string name;
    std::size_t n = 0; // 0 selects the problem's default

    std::string to_string() const;
};

// "bi-sphere:10", "wfg4" (n = 24), "zdt6:10"
ProblemSpec parse_problem_spec(const std::string &text);
std::unique_ptr<Problem> make_problem(const ProblemSpec &spec);
std::unique_ptr<Problem> make_problem(const std::string &text);

// WFG1..9 with M = 2 and k = 4 position variables.
std::unique_ptr<Problem> make_wfg(int index, std::size_t n);

} // namespace uhv
