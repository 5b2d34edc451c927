#include <uhv/rng.hpp>

#include <array>
#include <cmath>

namespace uhv
{

std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    std::array<std::uint32_t, 8> words{};
    for (std::size_t i = 0; i < words.size(); i += 2) {
        auto v = splitmix64(s);
        words[i] = static_cast<std::uint32_t>(v);
        words[i + 1] = static_cast<std::uint32_t>(v >> 32);
    }
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

double uniform01(Rng &rng)
{
    // 53 random bits, [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(Rng &rng, double lo, double hi)
{
    return lo + (hi - lo) * uniform01(rng);
}

// Marsaglia polar method; written out so streams do not depend on the
// standard library's distribution implementation.
double standard_normal(Rng &rng)
{
    double u, v, s;
    do {
        u = 2.0 * uniform01(rng) - 1.0;
        v = 2.0 * uniform01(rng) - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return u * std::sqrt(-2.0 * std::log(s) / s);
}

} // namespace uhv
