#include <uhv/metrics.hpp>

#include <uhv/hypervolume.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uhv
{

double delta_hv(std::span<const ObjPoint> set, const ObjPoint &r, const HvReference &ref, double tol)
{
    if (ref.r != r) throw std::invalid_argument("delta_hv: reference point does not match the HV reference");
    double d = ref.hv_star - hv2d(set, r);
    if (d < 0.0) {
        if (d < -tol) {
            std::ostringstream os;
            os.precision(17);
            os << "stale HV reference for " << ref.problem << " p=" << ref.p << ": observed HV exceeds " << ref.hv_star
               << " by " << -d;
            throw stale_reference_error(os.str());
        }
        d = 0.0;
    }
    return d;
}

double gd(std::span<const ObjPoint> set, const ObjPoint &r, const FrontOracle &oracle)
{
    auto ids = approximation_set(set, r);
    if (ids.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (auto i : ids) s += oracle.distance(set[i]);
    return s / static_cast<double>(ids.size());
}

double igd(std::span<const ObjPoint> archive, std::span<const ObjPoint> front_samples)
{
    if (archive.empty() || front_samples.empty()) return std::numeric_limits<double>::quiet_NaN();
    NearestPoint idx(std::vector<ObjPoint>(archive.begin(), archive.end()));
    double s = 0.0;
    for (const auto &y : front_samples) s += idx.distance(y);
    return s / static_cast<double>(front_samples.size());
}

double igd(std::span<const ObjPoint> archive, const FrontOracle &oracle) { return igd(archive, oracle.samples()); }

std::vector<std::size_t> niche_counts(std::span<const ObjPoint> set, const ObjPoint &r, const NicheIntervals &niches,
                                      bool whole_set)
{
    std::vector<std::size_t> counts(niches.size(), 0);
    std::vector<std::size_t> ids;
    if (whole_set) {
        for (std::size_t i = 0; i < set.size(); ++i)
            if (set[i][0] < r[0] && set[i][1] < r[1]) ids.push_back(i);
    } else {
        ids = approximation_set(set, r);
    }
    for (auto i : ids) {
        const double f1 = set[i][0];
        // outer edges get a little slack: f1 minima computed two ways differ in the last bits
        constexpr double slack = 1e-12;
        for (std::size_t k = 0; k < niches.size(); ++k) {
            const bool last = k + 1 == niches.size();
            const double lo = k == 0 ? niches[k].first - slack : niches[k].first;
            if (f1 >= lo && (f1 < niches[k].second || (last && f1 <= niches[k].second + slack))) {
                ++counts[k];
                break;
            }
        }
    }
    return counts;
}

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b, double alpha)
{
    const std::size_t na = a.size(), nb = b.size(), n = na + nb;
    if (na == 0 || nb == 0) throw std::invalid_argument("rank_sum_test: empty sample");
    std::vector<std::pair<double, int>> all;
    all.reserve(n);
    for (double v : a) all.emplace_back(v, 0);
    for (double v : b) all.emplace_back(v, 1);
    std::sort(all.begin(), all.end(), [](const auto &x, const auto &y) { return x.first < y.first; });

    double ra = 0.0, tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && all[j].first == all[i].first) ++j;
        const double avg = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            if (all[k].second == 0) ra += avg;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    const double dna = static_cast<double>(na), dnb = static_cast<double>(nb), dn = static_cast<double>(n);
    const double u = ra - dna * (dna + 1.0) / 2.0;
    const double mu = dna * dnb / 2.0;
    const double var = dna * dnb / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
    RankSumResult res;
    if (var <= 0.0) return res; // every value tied
    res.z = (u - mu) / std::sqrt(var);
    res.p_value = std::erfc(std::fabs(res.z) / std::sqrt(2.0));
    res.significant = res.p_value < alpha;
    return res;
}

} // namespace uhv
