#pragma once

#include <cstdint>
#include <random>

namespace uhv
{

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t &state);

// Independent generator for (seed, stream). Streams never overlap in their
// seeding material, so adding repetitions leaves earlier ones untouched.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

double uniform01(Rng &rng);
double uniform(Rng &rng, double lo, double hi);
double standard_normal(Rng &rng);

} // namespace uhv
