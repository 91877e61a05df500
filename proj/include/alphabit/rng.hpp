#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace alphabit::rng {

// Stream tags for the seed fan-out scheme. Every random decision in the
// pipeline draws from a generator seeded as
//   derive(root_seed, {tag, counter...})
// so that parallel execution order cannot change any draw.
enum Stream : std::uint64_t {
    kSplitFold = 1,
    kTrialParams = 2,
    kTrialSplit = 3,
    kTrialFit = 4,
    kBagging = 5,
    kFeatureSample = 6,
    kBootstrap = 7,
    kBackground = 8,
    kSynthFactors = 9,
    kSynthCompany = 10,
    kSynthScores = 11,
    kSynthIdio = 12,
    kSynthMissing = 13,
    kSynthYearSign = 14,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive(std::uint64_t root, std::initializer_list<std::uint64_t> ids) {
    std::uint64_t h = splitmix64(root);
    for (std::uint64_t id : ids)
        h = splitmix64(h ^ id);
    return h;
}

inline std::mt19937_64 engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

// Hand-rolled draws: the std distributions are implementation-defined, and
// frozen test values must not depend on the standard library version.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + uniform01(g) * (hi - lo);
}

inline double log_uniform(std::mt19937_64& g, double lo, double hi) {
    return std::exp(uniform(g, std::log(lo), std::log(hi)));
}

// Inclusive on both ends.
inline std::int64_t uniform_int(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

inline double normal(std::mt19937_64& g) {
    // Box-Muller; polar form avoided so the draw count per call is fixed.
    double u1 = uniform01(g);
    double u2 = uniform01(g);
    if (u1 <= 0.0)
        u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& g) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_int(g, 0, static_cast<std::int64_t>(i) - 1));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace alphabit::rng
