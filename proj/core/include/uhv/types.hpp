#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace uhv
{

using ObjPoint = std::array<double, 2>;
using Vector = std::vector<double>;

// Thrown when a run observes a hypervolume above the stored optimum.
class stale_reference_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Invalid experiment configuration or command line.
class config_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace uhv
