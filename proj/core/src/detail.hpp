#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace uhv::detail
{

double golden_min(const std::function<double(double)> &f, double a, double b, double tol = 1e-15);

// Non-dominated pieces of t -> (g(t), h(t)), t in [0, 1], g increasing.
std::vector<std::pair<double, double>> running_min_segments(const std::function<double(double)> &h);

} // namespace uhv::detail
