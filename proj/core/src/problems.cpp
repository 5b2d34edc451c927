#include <uhv/problems.hpp>

#include "detail.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace uhv
{

Problem::Problem(std::string name, std::size_t n, Vector init_lower, Vector init_upper, Vector lower,
                 Vector upper)
    : name_(std::move(name)), n_(n), init_lower_(std::move(init_lower)), init_upper_(std::move(init_upper)),
      lower_(std::move(lower)), upper_(std::move(upper))
{
    if (n_ == 0) throw std::invalid_argument("problem dimension must be positive");
}

ObjPoint Problem::evaluate(std::span<const double> x)
{
    if (x.size() != n_)
        throw std::invalid_argument(name_ + ": expected " + std::to_string(n_) + " variables, got "
                                    + std::to_string(x.size()));
    if (bounded() && !in_bounds(x)) throw std::domain_error(name_ + ": decision vector outside the box");
    ++evals_;
    return compute(x);
}

bool Problem::in_bounds(std::span<const double> x) const
{
    if (!bounded()) return true;
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
    }
    return true;
}

bool Problem::repair(std::span<double> x, Rng &rng) const
{
    if (in_bounds(x)) return false;
    sample_init(x, rng);
    return true;
}

Vector Problem::sample_init(Rng &rng) const
{
    Vector x(n_);
    sample_init(x, rng);
    return x;
}

void Problem::sample_init(std::span<double> x, Rng &rng) const
{
    for (std::size_t i = 0; i < n_; ++i) x[i] = uniform(rng, init_lower_[i], init_upper_[i]);
}

FrontOracle Problem::front_oracle(std::size_t k) const
{
    return FrontOracle::sampled(front_curve().sample(k));
}

std::string ProblemSpec::to_string() const
{
    return n == 0 ? name : name + ":" + std::to_string(n);
}

namespace detail
{

double golden_min(const std::function<double(double)> &f, double a, double b, double tol)
{
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

// Non-dominated pieces of t -> (g1(t), h(t)) with g1 increasing: h must be
// below its running minimum. Ends refined to local minima, starts by bisection.
std::vector<std::pair<double, double>> running_min_segments(const std::function<double(double)> &h)
{
    const std::size_t g = 200000;
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= g; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(g);
        double v = h(t);
        if (v < best) {
            best = v;
            if (!runs.empty() && runs.back().second + 1 == i)
                runs.back().second = i;
            else
                runs.emplace_back(i, i);
        }
    }
    const double dt = 1.0 / static_cast<double>(g);
    std::vector<std::pair<double, double>> segs;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        double a = static_cast<double>(runs[r].first) * dt;
        double b = static_cast<double>(runs[r].second) * dt;
        if (r > 0) {
            double level = h(segs.back().second);
            double lo = a - dt, hi = a;
            for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
                double mid = 0.5 * (lo + hi);
                (h(mid) < level ? hi : lo) = mid;
            }
            a = hi;
        }
        if (runs[r].second < g) b = golden_min(h, std::max(a, b - dt), std::min(1.0, b + dt));
        else b = 1.0;
        segs.emplace_back(a, b);
    }
    return segs;
}

} // namespace detail

namespace
{

using detail::golden_min;
using detail::running_min_segments;

FrontCurve quadratic_front()
{
    FrontCurve c;
    c.map = [](double t) { return ObjPoint{t * t, (1.0 - t) * (1.0 - t)}; };
    c.segments = {{0.0, 1.0}};
    return c;
}

class BiSphere final : public Problem
{
public:
    explicit BiSphere(std::size_t n)
        : Problem("bi-sphere", n, Vector(n, -100.0), Vector(n, -50.0))
    {
    }

    FrontCurve front_curve() const override { return quadratic_front(); }
    FrontOracle front_oracle(std::size_t k) const override { return FrontOracle::analytic(front_curve(), k); }

protected:
    ObjPoint compute(std::span<const double> x) const override
    {
        double f1 = 0.0, f2 = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            f1 += x[i] * x[i];
            double d = x[i] - (i == 0 ? 1.0 : 0.0);
            f2 += d * d;
        }
        return {f1, f2};
    }
};

class SphereRotatedElli final : public Problem
{
public:
    explicit SphereRotatedElli(std::size_t n)
        : Problem("sphere-rotatedElli", n, Vector(n, -100.0), Vector(n, -50.0)), rot_(rotation(n)), w_(n)
    {
        for (std::size_t i = 0; i < n; ++i)
            w_[i] = n == 1 ? 1.0 : std::pow(10.0, 6.0 * static_cast<double>(i) / static_cast<double>(n - 1));
    }

    // Product of the pi/4 Givens rotations in planes (i, j), i < j, lexicographic.
    static Eigen::MatrixXd rotation(std::size_t n)
    {
        Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
        const double c = std::cos(std::numbers::pi / 4), s = std::sin(std::numbers::pi / 4);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
                g(i, i) = c;
                g(i, j) = -s;
                g(j, i) = s;
                g(j, j) = c;
                r = r * g;
            }
        }
        return r;
    }

    FrontCurve front_curve() const override { return quadratic_front(); }
    FrontOracle front_oracle(std::size_t k) const override { return FrontOracle::analytic(front_curve(), k); }

protected:
    ObjPoint compute(std::span<const double> x) const override
    {
        const std::size_t n = x.size();
        Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(n));
        Eigen::VectorXd y = rot_ * xv;
        y(0) -= 1.0;
        double f1 = xv.squaredNorm(), f2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) f2 += w_[i] * y(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(i));
        return {f1, f2};
    }

private:
    Eigen::MatrixXd rot_;
    Vector w_;
};

// Front of sphere-Rosenbrock, tabulated over s = sqrt(f1) by continuation of
// min f2 s.t. |x|^2/n = s^2, with the exact slope from the multiplier.
struct RosenbrockFront {
    std::size_t m = 0;
    Vector f, df;

    ObjPoint at(double s) const
    {
        s = std::clamp(s, 0.0, 1.0);
        double pos = s * static_cast<double>(m);
        std::size_t k = std::min(static_cast<std::size_t>(pos), m - 1);
        double h = 1.0 / static_cast<double>(m);
        double u = pos - static_cast<double>(k);
        double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
        double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
        double v = h00 * f[k] + h10 * h * df[k] + h01 * f[k + 1] + h11 * h * df[k + 1];
        return {s * s, std::max(0.0, v)};
    }
};

double rosen_f2(const Eigen::VectorXd &x)
{
    const auto n = x.size();
    double v = 0.0;
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        double a = x(i + 1) - x(i) * x(i), b = 1.0 - x(i);
        v += 100.0 * a * a + b * b;
    }
    return v / static_cast<double>(n - 1);
}

void rosen_grad_hess(const Eigen::VectorXd &x, Eigen::VectorXd &g, Eigen::MatrixXd &h)
{
    const auto n = x.size();
    g.setZero(n);
    h.setZero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        double a = x(i + 1) - x(i) * x(i);
        g(i) += -400.0 * a * x(i) - 2.0 * (1.0 - x(i));
        g(i + 1) += 200.0 * a;
        h(i, i) += -400.0 * a + 800.0 * x(i) * x(i) + 2.0;
        h(i, i + 1) += -400.0 * x(i);
        h(i + 1, i) += -400.0 * x(i);
        h(i + 1, i + 1) += 200.0;
    }
    const double sc = 1.0 / static_cast<double>(n - 1);
    g *= sc;
    h *= sc;
}

// Newton on the KKT system; x, mu updated in place.
bool rosen_kkt_solve(Eigen::VectorXd &x, double &mu, double s)
{
    const auto n = x.size();
    const double nn = static_cast<double>(n);
    Eigen::VectorXd g;
    Eigen::MatrixXd h;
    for (int it = 0; it < 100; ++it) {
        rosen_grad_hess(x, g, h);
        Eigen::VectorXd res(n + 1);
        res.head(n) = g + (2.0 * mu / nn) * x;
        res(n) = x.squaredNorm() / nn - s * s;
        Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n + 1, n + 1);
        j.topLeftCorner(n, n) = h + (2.0 * mu / nn) * Eigen::MatrixXd::Identity(n, n);
        j.block(0, n, n, 1) = (2.0 / nn) * x;
        j.block(n, 0, 1, n) = (2.0 / nn) * x.transpose();
        Eigen::VectorXd step = j.fullPivLu().solve(-res);
        x += step.head(n);
        mu += step(n);
        if (step.head(n).norm() < 1e-15 * (1.0 + x.norm()) && res.norm() < 1e-13) return true;
        if (!std::isfinite(mu)) return false;
    }
    rosen_grad_hess(x, g, h);
    return (g + (2.0 * mu / nn) * x).norm() < 1e-10;
}

std::shared_ptr<const RosenbrockFront> rosenbrock_front(std::size_t n)
{
    static std::mutex mtx;
    static std::map<std::size_t, std::shared_ptr<const RosenbrockFront>> cache;
    std::lock_guard lock(mtx);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    auto fr = std::make_shared<RosenbrockFront>();
    const std::size_t m = 4000;
    fr->m = m;
    fr->f.assign(m + 1, 0.0);
    fr->df.assign(m + 1, 0.0);
    const double nn = static_cast<double>(n);

    // at s = 0 the minimizer is the origin, slope -2 * sqrt(n / (n - 1))
    fr->f[0] = 1.0;
    fr->df[0] = -2.0 * std::sqrt(nn / (nn - 1.0));

    Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
    x(static_cast<Eigen::Index>(n) - 1) = 0.0;
    x.normalize();
    double mu = 0.0;
    {
        double s = 1.0 / static_cast<double>(m);
        x *= s * std::sqrt(nn);
        mu = std::sqrt(nn / (nn - 1.0)) / s;
    }
    for (std::size_t k = 1; k <= m; ++k) {
        double s = static_cast<double>(k) / static_cast<double>(m);
        if (k > 1) {
            double prev = static_cast<double>(k - 1) / static_cast<double>(m);
            x *= s / prev;
        }
        if (!rosen_kkt_solve(x, mu, s)) throw std::runtime_error("sphere-Rosenbrock front continuation failed");
        fr->f[k] = rosen_f2(x);
        fr->df[k] = -2.0 * mu * s;
    }
    fr->f[m] = 0.0;
    fr->df[m] = 0.0;
    cache[n] = fr;
    return fr;
}

class SphereRosenbrock final : public Problem
{
public:
    explicit SphereRosenbrock(std::size_t n)
        : Problem("sphere-Rosenbrock", n, Vector(n, -5.0), Vector(n, 5.0))
    {
        if (n < 2) throw std::invalid_argument("sphere-Rosenbrock needs n >= 2");
    }

    FrontCurve front_curve() const override
    {
        auto fr = rosenbrock_front(dim());
        FrontCurve c;
        c.map = [fr](double s) { return fr->at(s); };
        c.segments = {{0.0, 1.0}};
        return c;
    }
    FrontOracle front_oracle(std::size_t k) const override { return FrontOracle::analytic(front_curve(), k); }

protected:
    ObjPoint compute(std::span<const double> x) const override
    {
        const std::size_t n = x.size();
        double f1 = 0.0, f2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) f1 += x[i] * x[i];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            double a = x[i + 1] - x[i] * x[i], b = 1.0 - x[i];
            f2 += 100.0 * a * a + b * b;
        }
        return {f1 / static_cast<double>(n), f2 / static_cast<double>(n - 1)};
    }
};

class Zdt3 final : public Problem
{
public:
    explicit Zdt3(std::size_t n)
        : Problem("zdt3", n, Vector(n, 0.0), Vector(n, 1.0), Vector(n, 0.0), Vector(n, 1.0))
    {
        if (n < 2) throw std::invalid_argument("zdt3 needs n >= 2");
    }

    static double h(double t) { return 1.0 - std::sqrt(t) - t * std::sin(10.0 * std::numbers::pi * t); }

    FrontCurve front_curve() const override
    {
        static const auto segs = running_min_segments(h);
        FrontCurve c;
        c.map = [](double t) { return ObjPoint{t, h(t)}; };
        c.segments = segs;
        return c;
    }

protected:
    ObjPoint compute(std::span<const double> x) const override
    {
        const std::size_t n = x.size();
        double s = 0.0;
        for (std::size_t i = 1; i < n; ++i) s += x[i];
        double g = 1.0 + 9.0 * s / static_cast<double>(n - 1);
        double f1 = x[0], q = f1 / g;
        return {f1, g * (1.0 - std::sqrt(q) - q * std::sin(10.0 * std::numbers::pi * f1))};
    }
};

class Zdt6 final : public Problem
{
public:
    explicit Zdt6(std::size_t n)
        : Problem("zdt6", n, Vector(n, 0.0), Vector(n, 1.0), Vector(n, 0.0), Vector(n, 1.0))
    {
        if (n < 2) throw std::invalid_argument("zdt6 needs n >= 2");
    }

    static double f1_of(double x1)
    {
        return 1.0 - std::exp(-4.0 * x1) * std::pow(std::sin(6.0 * std::numbers::pi * x1), 6);
    }
    static double f1_min()
    {
        static const double v = f1_of(golden_min(f1_of, 0.0, 1.0 / 6.0));
        return v;
    }

    FrontCurve front_curve() const override
    {
        FrontCurve c;
        c.map = [](double t) { return ObjPoint{t, 1.0 - t * t}; };
        c.segments = {{f1_min(), 1.0}};
        return c;
    }

protected:
    ObjPoint compute(std::span<const double> x) const override
    {
        const std::size_t n = x.size();
        double s = 0.0;
        for (std::size_t i = 1; i < n; ++i) s += x[i];
        double g = 1.0 + 9.0 * std::pow(s / static_cast<double>(n - 1), 0.25);
        double f1 = f1_of(x[0]), q = f1 / g;
        return {f1, g * (1.0 - q * q)};
    }
};

std::string lower(std::string s)
{
    for (auto &ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

} // namespace

ProblemSpec parse_problem_spec(const std::string &text)
{
    ProblemSpec spec;
    auto colon = text.find(':');
    spec.name = lower(text.substr(0, colon));
    if (colon != std::string::npos) {
        const auto num = text.substr(colon + 1);
        std::size_t n = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
        if (ec != std::errc() || ptr != num.data() + num.size() || n == 0)
            throw std::invalid_argument("bad dimension in problem spec '" + text + "'");
        spec.n = n;
    }
    if (spec.name == "sphere-rotatedelli") spec.name = "sphere-rotatedElli";
    if (spec.name == "sphere-rosenbrock") spec.name = "sphere-Rosenbrock";
    return spec;
}

std::unique_ptr<Problem> make_problem(const ProblemSpec &spec)
{
    const auto &nm = spec.name;
    if (nm.size() == 4 && nm.rfind("wfg", 0) == 0 && nm[3] >= '1' && nm[3] <= '9')
        return make_wfg(nm[3] - '0', spec.n == 0 ? 24 : spec.n);
    const std::size_t n = spec.n == 0 ? 10 : spec.n;
    if (nm == "bi-sphere") return std::make_unique<BiSphere>(n);
    if (nm == "sphere-rotatedElli") return std::make_unique<SphereRotatedElli>(n);
    if (nm == "sphere-Rosenbrock") return std::make_unique<SphereRosenbrock>(n);
    if (nm == "zdt3") return std::make_unique<Zdt3>(n);
    if (nm == "zdt6") return std::make_unique<Zdt6>(n);
    throw std::invalid_argument("unknown problem '" + nm + "'");
}

std::unique_ptr<Problem> make_problem(const std::string &text)
{
    return make_problem(parse_problem_spec(text));
}

} // namespace uhv
