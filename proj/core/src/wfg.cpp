#include <uhv/problems.hpp>

#include "detail.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uhv
{

namespace
{

constexpr double pi = std::numbers::pi;

double correct_to_01(double a)
{
    constexpr double eps = 1e-10;
    if (a <= 0.0 && a >= -eps) return 0.0;
    if (a >= 1.0 && a <= 1.0 + eps) return 1.0;
    return a;
}

double b_poly(double y, double alpha) { return correct_to_01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c)
{
    double t1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
    double t2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return correct_to_01(a + t1 - t2);
}

double b_param(double y, double u, double a, double b, double c)
{
    double v = a - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + a);
    return correct_to_01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) { return correct_to_01(std::fabs(y - a) / std::fabs(std::floor(a - y) + a)); }

double s_decept(double y, double a, double b, double c)
{
    double t1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    double t2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return correct_to_01(1.0 + (std::fabs(y - a) - b) * (t1 + t2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c)
{
    double t1 = std::fabs(y - c) / (2.0 * (std::floor(c - y) + c));
    double t2 = (4.0 * a + 2.0) * pi * (0.5 - t1);
    return correct_to_01((1.0 + std::cos(t2) + 4.0 * b * t1 * t1) / (b + 2.0));
}

double r_sum(const double *y, const double *w, std::size_t len)
{
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return correct_to_01(num / den);
}

double r_sum_ones(const double *y, std::size_t len)
{
    double num = 0.0;
    for (std::size_t i = 0; i < len; ++i) num += y[i];
    return correct_to_01(num / static_cast<double>(len));
}

double r_nonsep(const double *y, std::size_t len, std::size_t a)
{
    double num = 0.0;
    for (std::size_t j = 0; j < len; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= a; ++k) num += std::fabs(y[j] - y[(j + k + 1) % len]);
    }
    const double ad = static_cast<double>(a);
    const double tmp = std::ceil(ad / 2.0);
    const double den = static_cast<double>(len) * tmp * (1.0 + 2.0 * ad - 2.0 * tmp) / ad;
    return correct_to_01(num / den);
}

constexpr double kParamA = 0.98 / 49.98;

// WFG with M = 2, k = 4, D = 1, S = (2, 4).
class Wfg final : public Problem
{
public:
    Wfg(int index, std::size_t n)
        : Problem("wfg" + std::to_string(index), n, Vector(n, 0.0), upper_bounds(n), Vector(n, 0.0),
                  upper_bounds(n)),
          index_(index), k_(4), l_(n - 4)
    {
    }

    static Vector upper_bounds(std::size_t n)
    {
        Vector u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = 2.0 * static_cast<double>(i + 1);
        return u;
    }

    FrontCurve front_curve() const override
    {
        FrontCurve c;
        switch (index_) {
        case 1:
            c.map = [](double t) {
                return ObjPoint{2.0 * (1.0 - std::cos(t * pi / 2)), 4.0 * (1.0 - t + std::sin(10.0 * pi * t) / (10.0 * pi))};
            };
            c.segments = {{0.0, 1.0}};
            break;
        case 2: {
            auto h = [](double t) { double cs = std::cos(5.0 * pi * t); return 4.0 * (1.0 - t * cs * cs); };
            c.map = [h](double t) { return ObjPoint{2.0 * (1.0 - std::cos(t * pi / 2)), h(t)}; };
            static const auto segs = detail::running_min_segments(h);
            c.segments = segs;
            break;
        }
        case 3:
            c.map = [](double t) { return ObjPoint{2.0 * t, 4.0 * (1.0 - t)}; };
            c.segments = {{0.0, 1.0}};
            break;
        default:
            c.map = [](double t) { return ObjPoint{2.0 * std::sin(t * pi / 2), 4.0 * std::cos(t * pi / 2)}; };
            c.segments = {{0.0, 1.0}};
            break;
        }
        return c;
    }

protected:
    ObjPoint compute(std::span<const double> z) const override
    {
        const std::size_t n = z.size(), k = k_, l = l_;
        Vector y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = z[i] / (2.0 * static_cast<double>(i + 1));

        double tp = 0.0, td = 0.0; // reduced position and distance parameters
        switch (index_) {
        case 1: {
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            for (std::size_t i = k; i < n; ++i) y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
            for (std::size_t i = 0; i < n; ++i) y[i] = b_poly(y[i], 0.02);
            Vector w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = 2.0 * static_cast<double>(i + 1);
            tp = r_sum(y.data(), w.data(), k);
            td = r_sum(y.data() + k, w.data() + k, l);
            break;
        }
        case 2:
        case 3: {
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            Vector d(l / 2);
            for (std::size_t i = 0; i < l / 2; ++i) d[i] = r_nonsep(y.data() + k + 2 * i, 2, 2);
            tp = r_sum_ones(y.data(), k);
            td = r_sum_ones(d.data(), l / 2);
            break;
        }
        case 4:
            for (std::size_t i = 0; i < n; ++i) y[i] = s_multi(y[i], 30.0, 10.0, 0.35);
            tp = r_sum_ones(y.data(), k);
            td = r_sum_ones(y.data() + k, l);
            break;
        case 5:
            for (std::size_t i = 0; i < n; ++i) y[i] = s_decept(y[i], 0.35, 0.001, 0.05);
            tp = r_sum_ones(y.data(), k);
            td = r_sum_ones(y.data() + k, l);
            break;
        case 6:
            for (std::size_t i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
            tp = r_nonsep(y.data(), k, k);
            td = r_nonsep(y.data() + k, l, l);
            break;
        case 7: {
            Vector t(y);
            for (std::size_t i = 0; i < k; ++i) t[i] = b_param(y[i], r_sum_ones(y.data() + i + 1, n - i - 1), kParamA, 0.02, 50.0);
            for (std::size_t i = k; i < n; ++i) t[i] = s_linear(t[i], 0.35);
            tp = r_sum_ones(t.data(), k);
            td = r_sum_ones(t.data() + k, l);
            break;
        }
        case 8: {
            Vector t(y);
            for (std::size_t i = k; i < n; ++i) t[i] = b_param(y[i], r_sum_ones(y.data(), i), kParamA, 0.02, 50.0);
            for (std::size_t i = k; i < n; ++i) t[i] = s_linear(t[i], 0.35);
            tp = r_sum_ones(t.data(), k);
            td = r_sum_ones(t.data() + k, l);
            break;
        }
        case 9: {
            Vector t(y);
            for (std::size_t i = 0; i + 1 < n; ++i) t[i] = b_param(y[i], r_sum_ones(y.data() + i + 1, n - i - 1), kParamA, 0.02, 50.0);
            for (std::size_t i = 0; i < k; ++i) t[i] = s_decept(t[i], 0.35, 0.001, 0.05);
            for (std::size_t i = k; i < n; ++i) t[i] = s_multi(t[i], 30.0, 95.0, 0.35);
            tp = r_nonsep(t.data(), k, k);
            td = r_nonsep(t.data() + k, l, l);
            break;
        }
        default:
            throw std::logic_error("bad WFG index");
        }

        // A_1 = 1 for every member when M = 2, so the position parameter is tp itself
        const double x1 = std::max(td, 1.0) * (tp - 0.5) + 0.5;
        double h1, h2;
        switch (index_) {
        case 1:
            h1 = 1.0 - std::cos(x1 * pi / 2);
            h2 = 1.0 - x1 - std::cos(10.0 * pi * x1 + pi / 2) / (10.0 * pi);
            break;
        case 2: {
            h1 = 1.0 - std::cos(x1 * pi / 2);
            double cs = std::cos(5.0 * pi * x1);
            h2 = 1.0 - x1 * cs * cs;
            break;
        }
        case 3:
            h1 = x1;
            h2 = 1.0 - x1;
            break;
        default:
            h1 = std::sin(x1 * pi / 2);
            h2 = std::cos(x1 * pi / 2);
            break;
        }
        return {td + 2.0 * h1, td + 4.0 * h2};
    }

private:
    int index_;
    std::size_t k_, l_;
};

} // namespace

std::unique_ptr<Problem> make_wfg(int index, std::size_t n)
{
    if (index < 1 || index > 9) throw std::invalid_argument("WFG index must be in 1..9");
    if (n <= 4) throw std::invalid_argument("WFG needs n > k = 4 (distance variables l = n - 4 >= 1)");
    if ((index == 2 || index == 3) && (n - 4) % 2 != 0)
        throw std::invalid_argument("WFG2/WFG3 need an even number of distance variables");
    return std::make_unique<Wfg>(index, n);
}

} // namespace uhv
