#pragma once

#include <cstdint>

#include "tww/graph.hpp"

namespace tww {

/// Same seed + same parameters reproduce bit-identical graphs.
using Seed = std::uint64_t;

// splitmix64. Kept self-contained so output streams never depend on the
// standard library's unspecified distribution algorithms.
class Rng {
public:
    explicit Rng(Seed seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [0,1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Derived stream seed for trial `stream`; distinct streams are independent.
Seed mix_seed(Seed seed, std::uint64_t stream);

/// G(n,p): each pair included independently with probability p.
Graph gen_gnp(int n, double p, Seed seed);

/// Uniform graph with exactly m edges.
Graph gen_gnm(int n, long long m, Seed seed);

/// Uniform simple d-regular graph via the pairing model with full rejection
/// of loops and multi-edges. Rejection count is reported through `retries`
/// when given. d large enough to make rejection impractical is refused.
Graph gen_regular(int n, int d, Seed seed, long long* retries = nullptr);

}  // namespace tww
