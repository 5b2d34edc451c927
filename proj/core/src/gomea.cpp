#include <uhv/gomea.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uhv
{

std::size_t selection_size(std::size_t n, double tau)
{
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(tau * static_cast<double>(n))));
}

std::vector<std::size_t> select_top(std::span<const double> fitness, std::size_t count)
{
    std::vector<std::size_t> idx(fitness.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    count = std::min(count, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(count), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          return fitness[a] > fitness[b] || (fitness[a] == fitness[b] && a < b);
                      });
    idx.resize(count);
    return idx;
}

double ledoit_wolf_intensity(const Eigen::MatrixXd &centered)
{
    const auto t = centered.rows();
    const auto d = centered.cols();
    if (t < 2 || d < 2) return 1.0;
    const double tt = static_cast<double>(t);
    Eigen::MatrixXd s = centered.transpose() * centered / tt;
    double num = 0.0, den = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            if (i == j) continue;
            double v = 0.0;
            for (Eigen::Index k = 0; k < t; ++k) {
                double w = centered(k, i) * centered(k, j) - s(i, j);
                v += w * w;
            }
            num += v / (tt * tt);
            den += s(i, j) * s(i, j);
        }
    }
    if (den <= 0.0) return 1.0;
    return std::clamp(num / den, 0.0, 1.0);
}

namespace
{

GaussianModel diagonal_model(GaussianModel m, const Eigen::MatrixXd &centered, double floor_v)
{
    const double t = static_cast<double>(centered.rows());
    const auto d = centered.cols();
    m.factor = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        m.factor(i, i) = std::sqrt(std::max(centered.col(i).squaredNorm() / t, floor_v));
    m.mode = ModelMode::diagonal;
    return m;
}

} // namespace

GaussianModel fit_model(const std::vector<Vector> &rows, std::span<const std::size_t> selection,
                        std::span<const std::size_t> subset, double tau, std::size_t n_pop, bool &use_lw,
                        double variance_floor)
{
    if (selection.empty()) throw std::invalid_argument("fit_model: empty selection");
    const auto t = static_cast<Eigen::Index>(selection.size());
    const auto d = static_cast<Eigen::Index>(subset.size());
    GaussianModel m;
    m.subset.assign(subset.begin(), subset.end());
    Eigen::MatrixXd data(t, d);
    for (Eigen::Index k = 0; k < t; ++k) {
        const auto &row = rows[selection[static_cast<std::size_t>(k)]];
        for (Eigen::Index i = 0; i < d; ++i) data(k, i) = row[subset[static_cast<std::size_t>(i)]];
    }
    m.mean = data.colwise().mean().transpose();
    Eigen::MatrixXd centered = data.rowwise() - m.mean.transpose();

    if (static_cast<double>(d) > tau * static_cast<double>(n_pop) - 1.0) return diagonal_model(std::move(m), centered, variance_floor);

    Eigen::MatrixXd cov = centered.transpose() * centered / static_cast<double>(t);
    auto try_factor = [&](const Eigen::MatrixXd &c, ModelMode mode) {
        Eigen::LLT<Eigen::MatrixXd> llt(c);
        if (llt.info() != Eigen::Success) return false;
        Eigen::MatrixXd l = llt.matrixL();
        if (!l.allFinite() || (l.diagonal().array() <= 0.0).any()) return false;
        m.factor = std::move(l);
        m.mode = mode;
        return true;
    };
    if (!use_lw && try_factor(cov, ModelMode::full)) return m;
    use_lw = true;
    const double lambda = ledoit_wolf_intensity(centered);
    Eigen::MatrixXd shrunk = (1.0 - lambda) * cov;
    shrunk.diagonal() = cov.diagonal();
    if (try_factor(shrunk, ModelMode::ledoit_wolf)) return m;
    return diagonal_model(std::move(m), centered, variance_floor);
}

void sample_partial(const GaussianModel &m, std::span<double> genotype, Rng &rng, double multiplier,
                    const Eigen::VectorXd *shift)
{
    const auto d = static_cast<Eigen::Index>(m.subset.size());
    Eigen::VectorXd z(d);
    for (Eigen::Index i = 0; i < d; ++i) z(i) = standard_normal(rng);
    Eigen::VectorXd v;
    if (m.mode == ModelMode::diagonal)
        v = m.factor.diagonal().cwiseProduct(z);
    else
        v = m.factor.triangularView<Eigen::Lower>() * z;
    v = m.mean + multiplier * v;
    if (shift) v += *shift;
    for (Eigen::Index i = 0; i < d; ++i) genotype[m.subset[static_cast<std::size_t>(i)]] = v(i);
}

double standard_deviation_ratio(const GaussianModel &m, const Eigen::VectorXd &improved_mean)
{
    Eigen::VectorXd dev = improved_mean - m.mean;
    Eigen::VectorXd z = m.mode == ModelMode::diagonal ? Eigen::VectorXd(dev.cwiseQuotient(m.factor.diagonal()))
                                                      : Eigen::VectorXd(m.factor.triangularView<Eigen::Lower>().solve(dev));
    return z.cwiseAbs().maxCoeff();
}

void adapt_multiplier(SubsetState &st, const GomOptions &opts, std::optional<double> sdr)
{
    const std::size_t nis_max = opts.max_no_improvement;
    if (sdr) {
        st.no_improvement = 0;
        if (st.multiplier < 1.0) st.multiplier = 1.0;
        if (*sdr > opts.sdr_threshold) st.multiplier *= opts.eta_inc;
    } else {
        if (st.multiplier <= 1.0) ++st.no_improvement;
        if (st.multiplier > 1.0 || st.no_improvement >= nis_max) st.multiplier *= opts.eta_dec;
        if (st.no_improvement < nis_max && st.multiplier < 1.0) st.multiplier = 1.0;
    }
}

GomEngine::GomEngine(std::size_t pop_size, std::size_t dim, GomOptions opts)
    : dim_(dim), opts_(opts), rows_(pop_size, Vector(dim, 0.0)), fitness_(pop_size, 0.0), member_nis_(pop_size, 0)
{
    if (pop_size < 2) throw std::invalid_argument("population size must be at least 2");
    if (opts_.max_no_improvement == 0) opts_.max_no_improvement = 25 + dim;
}

std::size_t GomEngine::best() const
{
    std::size_t b = 0;
    for (std::size_t j = 1; j < fitness_.size(); ++j)
        if (fitness_[j] > fitness_[b]) b = j;
    return b;
}

bool GomEngine::generation(const Fos &fos, GomObjective &obj, Rng &rng)
{
    const std::size_t n_pop = rows_.size();
    const std::size_t n_sel = selection_size(n_pop, opts_.tau);
    const std::size_t n_ams =
        static_cast<std::size_t>(std::floor(opts_.ams_fraction * opts_.tau * static_cast<double>(n_pop)));
    last_modes_.clear();
    Vector backup;
    const std::vector<double> start = fitness_;

    for (std::size_t s = 0; s < fos.size(); ++s) {
        if (fos.skip[s]) continue;
        const auto &subset = fos.subsets[s];
        auto &st = states_[subset];
        auto sel = select_top(fitness_, n_sel);
        auto model = fit_model(rows_, sel, subset, opts_.tau, n_pop, st.use_lw, opts_.variance_floor);
        last_modes_.push_back(model.mode);

        const double mult = opts_.multipliers ? st.multiplier : 1.0;
        Eigen::VectorXd shift;
        const bool ams = opts_.multipliers && st.prev_mean.size() == model.mean.size();
        if (ams) shift = opts_.ams_delta * mult * (model.mean - st.prev_mean);

        const double elite = fitness_[sel.front()];
        Eigen::VectorXd improved_sum = Eigen::VectorXd::Zero(model.mean.size());
        std::size_t n_improved = 0;

        // mean shift goes to the best ranked members after the elite
        std::vector<char> shifted(n_pop, 0);
        for (std::size_t q = 1; q <= n_ams && q < sel.size(); ++q) shifted[sel[q]] = 1;
        backup.resize(subset.size());
        for (std::size_t j = 0; j < n_pop; ++j) {
            auto &row = rows_[j];
            for (std::size_t i = 0; i < subset.size(); ++i) backup[i] = row[subset[i]];
            const Eigen::VectorXd *sh = (ams && shifted[j]) ? &shift : nullptr;
            sample_partial(model, row, rng, mult, sh);
            for (std::size_t t = 0; t < opts_.max_resamples && !obj.in_bounds(subset, row); ++t)
                sample_partial(model, row, rng, mult, sh);
            auto f = obj.try_update(j, subset, row);
            if (!f) {
                for (std::size_t i = 0; i < subset.size(); ++i) row[subset[i]] = backup[i];
                return false;
            }
            if (*f > fitness_[j]) {
                obj.accept(j);
                fitness_[j] = *f;
                if (*f > elite) {
                    for (std::size_t i = 0; i < subset.size(); ++i) improved_sum(static_cast<Eigen::Index>(i)) += row[subset[i]];
                    ++n_improved;
                }
            } else {
                obj.reject(j);
                for (std::size_t i = 0; i < subset.size(); ++i) row[subset[i]] = backup[i];
            }
        }

        if (opts_.multipliers) {
            std::optional<double> sdr;
            if (n_improved > 0) sdr = standard_deviation_ratio(model, improved_sum / static_cast<double>(n_improved));
            adapt_multiplier(st, opts_, sdr);
        }
        st.prev_mean = model.mean;
    }

    if (opts_.forced_improvements) {
        const std::size_t donor = best();
        for (std::size_t j = 0; j < n_pop; ++j) {
            if (fitness_[j] > start[j] || j == donor) {
                member_nis_[j] = 0;
                continue;
            }
            if (++member_nis_[j] <= opts_.max_no_improvement) continue;
            member_nis_[j] = 0;
            if (!forced_improvement(j, donor, fos, obj)) return false;
        }
    }
    return true;
}

bool GomEngine::forced_improvement(std::size_t member, std::size_t donor, const Fos &fos, GomObjective &obj)
{
    auto &row = rows_[member];
    const auto &elite = rows_[donor];
    Vector backup;
    // halve the step from the member towards the elite per sweep
    for (double alpha = 0.5; alpha >= 0.01; alpha *= 0.5) {
        for (std::size_t s = 0; s < fos.size(); ++s) {
            if (fos.skip[s]) continue;
            const auto &subset = fos.subsets[s];
            backup.resize(subset.size());
            for (std::size_t i = 0; i < subset.size(); ++i) {
                backup[i] = row[subset[i]];
                row[subset[i]] = alpha * row[subset[i]] + (1.0 - alpha) * elite[subset[i]];
            }
            auto f = obj.try_update(member, subset, row);
            if (!f) {
                for (std::size_t i = 0; i < subset.size(); ++i) row[subset[i]] = backup[i];
                return false;
            }
            if (*f > fitness_[member]) {
                obj.accept(member);
                fitness_[member] = *f;
                return true;
            }
            obj.reject(member);
            for (std::size_t i = 0; i < subset.size(); ++i) row[subset[i]] = backup[i];
        }
    }
    // no blend helped: become a copy of the elite
    std::vector<std::size_t> all(dim_);
    std::iota(all.begin(), all.end(), std::size_t{0});
    const Vector old = row;
    row = elite;
    auto f = obj.try_update(member, all, row);
    if (!f) {
        row = old;
        return false;
    }
    obj.accept(member);
    fitness_[member] = *f;
    return true;
}

} // namespace uhv
