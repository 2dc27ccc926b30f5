#pragma once

#include "srb/specfun.hpp"

#include <cstdint>

namespace srb {

/// Counter-keyed random stream. Each (seed, path, level, position) tuple owns
/// an independent splitmix64 sequence, so ensemble generation is reproducible
/// under any execution order. Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    explicit CounterRng(std::uint64_t seed, std::uint64_t path = 0,
                        std::uint64_t level = 0, std::uint64_t position = 0) {
        state_ = mix(seed + 0x9e3779b97f4a7c15ull);
        state_ = mix(state_ ^ mix(path + 0xbf58476d1ce4e5b9ull));
        state_ = mix(state_ ^ mix(level + 0x94d049bb133111ebull));
        state_ = mix(state_ ^ mix(position + 0xd6e8feb86659fd93ull));
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }
    result_type operator()() { return next_u64(); }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    /// Uniform draw strictly inside (0,1).
    double uniform01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal draw by inverse transform (monotone in the uniform).
    double normal() { return std_normal_quantile(uniform01()); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace srb
