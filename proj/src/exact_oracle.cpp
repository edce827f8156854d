#include "tww/exact_oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "tww/contraction_engine.hpp"

namespace tww {

namespace {

constexpr int MAX_N = 10;

using Masks = std::vector<std::uint16_t>;

int max_deg(const Masks& adj) {
    int d = 0;
    for (auto m : adj) d = std::max(d, std::popcount(m));
    return d;
}

// Merge vertices i<j of a k-vertex mask graph; the fused vertex replaces
// position i and position j is dropped, indices above j shift down.
Masks merge(const Masks& adj, int i, int j) {
    int k = static_cast<int>(adj.size());
    std::uint16_t fused =
        (adj[i] | adj[j]) & ~static_cast<std::uint16_t>((1u << i) | (1u << j));
    Masks out(k - 1);
    for (int v = 0; v < k; v++) {
        if (v == j) continue;
        std::uint16_t row = v == i ? fused : adj[v];
        if (row >> j & 1) row |= 1u << i;  // fold edges-to-j onto the fused vertex
        if (v == i) row &= ~static_cast<std::uint16_t>(1u << i);
        std::uint16_t low = row & static_cast<std::uint16_t>((1u << j) - 1);
        std::uint16_t high = static_cast<std::uint16_t>(row >> (j + 1));
        out[v < j ? v : v - 1] = static_cast<std::uint16_t>(low | (high << j));
    }
    return out;
}

// Iterated degree refinement with canonical color ids, then the smallest
// adjacency bitstring over within-class orderings (capped; falls back to
// class-then-index order, which costs cache hits but never correctness).
struct CanonicalForm {
    std::uint64_t key = 0;
    std::array<int, MAX_N> order{};  // canonical position -> current index
};

std::uint64_t adjacency_key(const Masks& adj, const std::array<int, MAX_N>& ord) {
    int k = static_cast<int>(adj.size());
    std::uint64_t bits = 0;
    int pos = 0;
    for (int a = 0; a < k; a++)
        for (int b = a + 1; b < k; b++, pos++)
            if (adj[ord[a]] >> ord[b] & 1) bits |= 1ULL << pos;
    return bits << 4 | static_cast<std::uint64_t>(k);
}

CanonicalForm canonicalize(const Masks& adj) {
    int k = static_cast<int>(adj.size());
    std::array<int, MAX_N> color{};
    for (int v = 0; v < k; v++) color[v] = std::popcount(adj[v]);
    // refine until stable
    while (true) {
        std::vector<std::pair<std::uint64_t, int>> sig(k);
        for (int v = 0; v < k; v++) {
            std::array<int, MAX_N> nb{};
            int cnt = 0;
            for (std::uint16_t rest = adj[v]; rest;) {
                int w = std::countr_zero(rest);
                rest &= rest - 1;
                nb[cnt++] = color[w];
            }
            std::sort(nb.begin(), nb.begin() + cnt);
            std::uint64_t h = static_cast<std::uint64_t>(color[v]);
            for (int t = 0; t < cnt; t++) h = h * 1315423911ULL + nb[t] + 1;
            sig[v] = {h, v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::array<int, MAX_N> next{};
        int classes = 0;
        for (int t = 0; t < k; t++) {
            if (t > 0 && sorted[t].first != sorted[t - 1].first) classes++;
            next[sorted[t].second] = classes;
        }
        bool same = true;
        for (int v = 0; v < k && same; v++) same = next[v] == color[v];
        // canonical ids: relabel by first appearance in sorted signature order
        color = next;
        if (same) break;
    }

    // group by color
    std::array<int, MAX_N> base_order{};
    std::iota(base_order.begin(), base_order.begin() + k, 0);
    std::stable_sort(base_order.begin(), base_order.begin() + k,
                     [&](int x, int y) { return color[x] < color[y]; });

    long long perms = 1;
    {
        int run = 1;
        for (int t = 1; t <= k; t++) {
            if (t < k && color[base_order[t]] == color[base_order[t - 1]]) {
                run++;
            } else {
                for (int f = 2; f <= run; f++) perms *= f;
                run = 1;
            }
            if (perms > 5040) break;
        }
    }

    CanonicalForm cf;
    if (perms > 5040) {
        cf.order = base_order;
        cf.key = adjacency_key(adj, cf.order);
        return cf;
    }

    // minimize over within-class permutations
    std::array<int, MAX_N> ord = base_order;
    std::uint64_t best_key = ~0ULL;
    std::array<int, MAX_N> best_ord = base_order;
    // next_permutation over the whole order constrained to equal-color swaps:
    // permute each class independently via odometer of per-class permutations
    std::vector<std::pair<int, int>> cls;  // [begin,end) per class
    for (int t = 0; t < k;) {
        int e = t;
        while (e < k && color[base_order[e]] == color[base_order[t]]) e++;
        cls.emplace_back(t, e);
        t = e;
    }
    std::vector<std::vector<int>> members(cls.size());
    for (size_t c = 0; c < cls.size(); c++)
        for (int t = cls[c].first; t < cls[c].second; t++)
            members[c].push_back(base_order[t]);
    // iterate: odometer over per-class permutations
    std::vector<std::vector<int>> perm = members;
    while (true) {
        int pos = 0;
        for (size_t c = 0; c < cls.size(); c++)
            for (int v : perm[c]) ord[pos++] = v;
        std::uint64_t key = adjacency_key(adj, ord);
        if (key < best_key) {
            best_key = key;
            best_ord = ord;
        }
        // advance odometer
        size_t c = 0;
        while (c < cls.size() && !std::next_permutation(perm[c].begin(), perm[c].end())) c++;
        if (c == cls.size()) break;
    }
    cf.key = best_key;
    cf.order = best_ord;
    return cf;
}

Masks masks_from_graph(const Graph& g) {
    Masks adj(g.n(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

}  // namespace

int StwwOracle::search(const Masks& adj, int cutoff) {
    if (++nodes_ > budget_)
        throw std::runtime_error("stww_exact: node budget exhausted (explored " +
                                 std::to_string(nodes_) + ")");
    int k = static_cast<int>(adj.size());
    if (k <= 1) return 0;
    int delta = max_deg(adj);
    if (delta >= cutoff) return delta;

    CanonicalForm cf = canonicalize(adj);
    auto it = memo_.find(cf.key);
    if (it != memo_.end()) {
        if (it->second.ub >= 0) return it->second.ub;
        if (it->second.lb >= cutoff) return it->second.lb;
    }

    // branch on merge pairs, cheapest fused degree first
    std::vector<std::pair<int, std::pair<int, int>>> moves;
    moves.reserve(k * (k - 1) / 2);
    for (int i = 0; i < k; i++)
        for (int j = i + 1; j < k; j++) {
            std::uint16_t fused =
                (adj[i] | adj[j]) & ~static_cast<std::uint16_t>((1u << i) | (1u << j));
            moves.push_back({std::popcount(fused), {i, j}});
        }
    std::sort(moves.begin(), moves.end());

    int best = cutoff;  // min over children, clipped at cutoff
    for (const auto& [fd, pr] : moves) {
        if (std::max(delta, fd) >= best) continue;  // cannot improve
        int child = search(merge(adj, pr.first, pr.second), best);
        best = std::min(best, std::max(child, delta));
    }
    int result = std::max(delta, best);

    Entry& e = memo_[cf.key];
    if (result < cutoff)
        e.ub = result;
    else
        e.lb = std::max(e.lb, cutoff);
    return result;
}

OracleResult StwwOracle::solve(const Graph& g, std::uint64_t node_budget) {
    if (g.n() > MAX_N)
        throw std::invalid_argument("stww_exact: hard guard, at most 10 vertices");
    if (g.n() == 0) throw std::invalid_argument("stww_exact: empty graph");
    if (node_budget == 0) throw std::invalid_argument("stww_exact: node budget must be positive");

    budget_ = node_budget;
    nodes_ = 0;
    OracleResult res;
    if (g.n() == 1) {
        res.witness.initial_n = 1;
        return res;
    }

    ContractionSequence greedy = greedy_contract(g);
    int ub = replay(g, greedy).width;
    Masks root = masks_from_graph(g);
    int val = search(root, ub);
    res.stww = std::min(val, ub);
    res.nodes_explored = nodes_;

    if (res.stww == ub) {
        res.witness = greedy;
        return res;
    }

    // witness reconstruction: walk down re-solving with an open cutoff; the
    // warm memo makes each step cheap. live[] maps mask positions to the
    // replay ids of the sequence being emitted.
    res.witness.initial_n = g.n();
    std::vector<int> live(g.n());
    std::iota(live.begin(), live.end(), 0);
    Masks cur = root;
    int target = res.stww;
    int next_id = g.n();
    while (cur.size() > 1) {
        int k = static_cast<int>(cur.size());
        bool advanced = false;
        for (int i = 0; i < k && !advanced; i++)
            for (int j = i + 1; j < k && !advanced; j++) {
                Masks child = merge(cur, i, j);
                if (std::max(max_deg(cur), search(child, target + 1)) <= target) {
                    res.witness.merges.emplace_back(live[i], live[j]);
                    live[i] = next_id++;
                    live.erase(live.begin() + j);
                    cur = std::move(child);
                    advanced = true;
                }
            }
        if (!advanced)
            throw std::runtime_error("stww_exact: witness reconstruction failed; memo corrupt");
    }
    res.nodes_explored = nodes_;
    return res;
}

OracleResult stww_exact(const Graph& g, std::uint64_t node_budget) {
    StwwOracle oracle;
    return oracle.solve(g, node_budget);
}

}  // namespace tww
