#include "tww/density.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace tww {

namespace {

// Dinic with 64-bit capacities.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(n, -1), level_(n), iter_(n) {}

    void add_edge(int from, int to, long long cap) {
        arcs_.push_back({to, head_[from], cap});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter_ = head_;
            long long f;
            while ((f = dfs(s, t, INF)) > 0) flow += f;
        }
        return flow;
    }

    // source side of the min cut, valid after run()
    std::vector<bool> min_cut_side(int s) const {
        std::vector<bool> vis(head_.size(), false);
        std::queue<int> q;
        q.push(s);
        vis[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && !vis[arcs_[e].to]) {
                    vis[arcs_[e].to] = true;
                    q.push(arcs_[e].to);
                }
        }
        return vis;
    }

private:
    static constexpr long long INF = (1LL << 62);
    struct Arc {
        int to, next;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && level_[arcs_[e].to] == -1) {
                    level_[arcs_[e].to] = level_[u] + 1;
                    q.push(arcs_[e].to);
                }
        }
        return level_[t] != -1;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t) return limit;
        for (int& e = iter_[u]; e != -1; e = arcs_[e].next) {
            Arc& a = arcs_[e];
            if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
                long long f = dfs(a.to, t, std::min(limit, a.cap));
                if (f > 0) {
                    a.cap -= f;
                    arcs_[e ^ 1].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, level_, iter_;
    std::vector<Arc> arcs_;
};

// Goldberg's construction. Decides whether some nonempty X has
// e(g[X]) / |X| > num/den; on success returns the maximizing cut side.
// Cut value for source side S:  n*m*den - 2*(den*e(S) - num*|S|), so the
// decision reads off max flow < n*m*den.
bool exceeds_density(const Graph& g, long long num, long long den, std::vector<int>* witness) {
    int n = g.n();
    long long m = g.m();
    int s = n, t = n + 1;
    MaxFlow mf(n + 2);
    for (int v = 0; v < n; v++) {
        mf.add_edge(s, v, m * den);
        long long back = m * den + 2 * num - den * g.degree(v);
        assert(back >= 0);
        mf.add_edge(v, t, back);
    }
    for (const auto& [u, v] : g.edges()) {
        mf.add_edge(u, v, den);
        mf.add_edge(v, u, den);
    }
    long long flow = mf.run(s, t);
    long long saturated = static_cast<long long>(n) * m * den;
    if (flow >= saturated) return false;
    if (witness) {
        auto side = mf.min_cut_side(s);
        witness->clear();
        for (int v = 0; v < n; v++)
            if (side[v]) witness->push_back(v);
        assert(!witness->empty());
    }
    return true;
}

long long edges_inside(const Graph& g, const std::vector<int>& xs) {
    std::vector<bool> in(g.n(), false);
    for (int v : xs) in[v] = true;
    long long e = 0;
    for (int v : xs)
        for (int w : g.neighbors(v))
            if (w > v && in[w]) e++;
    return e;
}

void guard_small(const Graph& g, const char* op) {
    if (g.n() > 24)
        throw std::invalid_argument(std::string(op) + ": exhaustive check limited to 24 vertices");
}

}  // namespace

DensestResult mad_exact(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("mad_exact: empty graph");
    if (g.m() == 0) return {Rational(0, 1), {0}};
    // Dinkelbach iteration on e(X)/|X|: each success yields a strictly denser
    // witness, each candidate is a rational with denominator <= n, so this
    // terminates with the exact optimum certified by a failing decision.
    std::vector<int> best(g.n());
    for (int v = 0; v < g.n(); v++) best[v] = v;
    long long e_best = g.m(), v_best = g.n();
    while (true) {
        std::vector<int> next;
        if (!exceeds_density(g, e_best, v_best, &next)) break;
        long long e_next = edges_inside(g, next);
        long long v_next = static_cast<long long>(next.size());
        // strict improvement is guaranteed by the cut construction
        assert(static_cast<__int128>(e_next) * v_best > static_cast<__int128>(e_best) * v_next);
        best = std::move(next);
        e_best = e_next;
        v_best = v_next;
    }
    return {Rational(2 * e_best, v_best), std::move(best)};
}

DensestResult densest_bruteforce(const Graph& g) {
    guard_small(g, "densest_bruteforce");
    if (g.n() == 0) throw std::invalid_argument("densest_bruteforce: empty graph");
    int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    long long e_best = 0, v_best = 1;
    std::uint32_t x_best = 1;
    for (std::uint32_t x = 1; x < (1u << n); x++) {
        long long e = 0;
        for (std::uint32_t rest = x; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(adj[v] & x & ((1u << v) - 1));
        }
        long long sz = std::popcount(x);
        if (static_cast<__int128>(e) * v_best > static_cast<__int128>(e_best) * sz) {
            e_best = e;
            v_best = sz;
            x_best = x;
        }
    }
    std::vector<int> witness;
    for (int v = 0; v < n; v++)
        if (x_best >> v & 1) witness.push_back(v);
    return {Rational(2 * e_best, v_best), std::move(witness)};
}

bool check_alpha_balanced(const Graph& g, const Rational& alpha) {
    guard_small(g, "check_alpha_balanced");
    int n = g.n();
    long long m = g.m();
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    for (std::uint32_t x = 1; n > 0 && x < (1u << n); x++) {
        long long sz = std::popcount(x);
        // only subsets with |X| <= alpha*(n-1)
        if (static_cast<__int128>(sz) * alpha.den > static_cast<__int128>(alpha.num) * (n - 1))
            continue;
        long long e = 0;
        for (std::uint32_t rest = x; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(adj[v] & x & ((1u << v) - 1));
        }
        // e(g[X]) <= (m/n)|X|, cross-multiplied
        if (e * static_cast<__int128>(n) > static_cast<__int128>(m) * sz) return false;
    }
    return true;
}

bool check_xlogx(const Graph& g, const Rational& alpha) {
    guard_small(g, "check_xlogx");
    int n = g.n();
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    for (std::uint32_t x = 1; n > 0 && x < (1u << n); x++) {
        long long sz = std::popcount(x);
        // only subsets with |X| >= alpha*n + 1
        if (static_cast<__int128>(sz - 1) * alpha.den < static_cast<__int128>(alpha.num) * n)
            continue;
        long long e = 0;
        for (std::uint32_t rest = x; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(adj[v] & x & ((1u << v) - 1));
        }
        double bound = 0.1 * static_cast<double>(sz) * std::log(static_cast<double>(sz));
        if (static_cast<double>(e) > bound + 1e-9) return false;
    }
    return true;
}

}  // namespace tww
