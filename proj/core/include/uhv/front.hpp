#pragma once

#include <uhv/types.hpp>

#include <functional>
#include <memory>
#include <utility>
#include <vector>

namespace uhv
{

// Parametric Pareto front: segments of parameter space, each mapped to a
// piece of the front with f1 increasing and f2 decreasing along t.
struct FrontCurve {
    std::function<ObjPoint(double)> map;
    std::vector<std::pair<double, double>> segments;

    ObjPoint operator()(double t) const { return map(t); }
    double total_length() const;
    // k parameter values evenly spaced over the union of the segments,
    // endpoints of the union included.
    std::vector<double> sample_parameters(std::size_t k) const;
    std::vector<ObjPoint> sample(std::size_t k) const;
};

// Nearest-point queries against a fixed point set sorted by f1.
class NearestPoint
{
public:
    NearestPoint() = default;
    explicit NearestPoint(std::vector<ObjPoint> pts);

    // Original index of the nearest point; requires a non-empty set.
    std::size_t nearest(const ObjPoint &y) const;
    double distance(const ObjPoint &y) const;
    bool empty() const { return pts_.empty(); }
    std::size_t size() const { return pts_.size(); }

private:
    std::size_t nearest_sorted(const ObjPoint &y, double &d2) const;

    std::vector<ObjPoint> pts_;
    std::vector<std::size_t> index_;
};

class FrontOracle
{
public:
    enum class Kind { analytic, sampled };

    // Minimizes over the curve parameter: dense bracket, then golden section.
    static FrontOracle analytic(FrontCurve curve, std::size_t igd_samples = 5000);
    // Nearest of the given samples; dominated samples are dropped.
    static FrontOracle sampled(std::vector<ObjPoint> pts);

    Kind kind() const { return kind_; }
    double distance(const ObjPoint &y) const;
    // Front sample used for IGD.
    const std::vector<ObjPoint> &samples() const { return samples_; }
    const NearestPoint &sample_index() const { return sample_index_; }

private:
    Kind kind_ = Kind::sampled;
    std::shared_ptr<const FrontCurve> curve_;
    std::vector<double> grid_t_;
    std::vector<std::size_t> grid_seg_;
    NearestPoint grid_;
    std::vector<ObjPoint> samples_;
    NearestPoint sample_index_;
};

} // namespace uhv
