#pragma once

#include <cstdint>
#include <unordered_map>

#include "tww/graph.hpp"

namespace tww {

struct OracleResult {
    int stww = 0;
    ContractionSequence witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact minimum-width search over all complete merge orders, for tiny
/// graphs (hard guard v(g) <= 10). Prunes on the incumbent and memoizes on a
/// degree-refined canonical form; the memo persists across calls so batches
/// of related graphs share work. Throws when node_budget is exhausted --
/// never returns a wrong answer.
class StwwOracle {
public:
    OracleResult solve(const Graph& g, std::uint64_t node_budget = 50'000'000);

private:
    struct Entry {
        int lb = 0;
        int ub = -1;  // >= 0 means exact value known
    };
    std::unordered_map<std::uint64_t, Entry> memo_;
    std::uint64_t nodes_ = 0, budget_ = 0;

    int search(const std::vector<std::uint16_t>& adj, int cutoff);
    friend struct OracleTestHook;
};

OracleResult stww_exact(const Graph& g, std::uint64_t node_budget = 50'000'000);

}  // namespace tww
