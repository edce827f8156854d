#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "test_util.hpp"
#include "tww/contraction_engine.hpp"
#include "tww/exact_oracle.hpp"
#include "tww/random_models.hpp"

using namespace tww;

namespace {

Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; i++) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; i++) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
        es.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(es));
}

// plain exhaustive minimum over every complete merge order, no pruning, no memo
int stww_unpruned(const Graph& g) {
    struct State {
        std::vector<std::vector<int>> adj;  // dense relabeled
    };
    auto max_deg = [](const std::vector<std::vector<int>>& adj) {
        size_t d = 0;
        for (const auto& nb : adj) d = std::max(d, nb.size());
        return static_cast<int>(d);
    };
    std::vector<std::vector<int>> adj(g.n());
    for (int v = 0; v < g.n(); v++) adj[v] = g.neighbors(v);
    auto rec = [&](auto&& self, const std::vector<std::vector<int>>& cur) -> int {
        int k = static_cast<int>(cur.size());
        int delta = max_deg(cur);
        if (k == 1) return delta;
        int best = std::numeric_limits<int>::max();
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++) {
                std::vector<std::vector<int>> nxt(k - 1);
                auto pos = [&](int v) { return v == i ? i : v < j ? v : v - 1; };
                std::vector<std::set<int>> sets(k - 1);
                for (int v = 0; v < k; v++)
                    for (int w : cur[v]) {
                        if (v == j && w == i) continue;
                        if (v == i && w == j) continue;
                        int pv = v == j ? i : pos(v), pw = w == j ? i : pos(w);
                        if (pv != pw) sets[pv].insert(pw);
                    }
                for (int v = 0; v < k - 1; v++) nxt[v].assign(sets[v].begin(), sets[v].end());
                best = std::min(best, self(self, nxt));
            }
        return std::max(delta, best);
    };
    return rec(rec, adj);
}

}  // namespace

TEST_CASE("oracle values for named graphs") {
    CHECK(stww_exact(Graph(2, {{0, 1}})).stww == 1);
    CHECK(stww_exact(path(4)).stww == 2);
    CHECK(stww_exact(Graph(1, {})).stww == 0);
    CHECK(stww_exact(Graph(5, {})).stww == 0);  // measured width of edgeless graphs is 0
    CHECK_THROWS_AS(stww_exact(Graph(11, {})), std::invalid_argument);
    CHECK_THROWS_AS(stww_exact(path(4), 0), std::invalid_argument);
}

TEST_CASE("witness always verifies at the reported value") {
    for (Seed s = 0; s < 40; s++) {
        int n = 2 + static_cast<int>(s % 7);
        Graph g = gen_gnp(n, 0.4, mix_seed(91, s));
        OracleResult res = stww_exact(g);
        std::string reason;
        CHECK(verify(g, res.witness, res.stww, &reason));
        if (g.n() >= 2) CHECK(res.stww >= g.max_degree());
    }
}

TEST_CASE("oracle agrees with the unpruned exhaustive search") {
    for (Seed s = 0; s < 25; s++) {
        int n = 3 + static_cast<int>(s % 4);  // up to 6: the unpruned search is factorial
        Graph g = gen_gnp(n, 0.5, mix_seed(92, s));
        CHECK(stww_exact(g).stww == stww_unpruned(g));
    }
}

TEST_CASE("value is invariant under vertex relabeling") {
    StwwOracle oracle;
    for (Seed s = 0; s < 12; s++) {
        Graph g = gen_gnp(7, 0.45, mix_seed(93, s));
        int base = oracle.solve(g).stww;
        Rng rng(mix_seed(94, s));
        for (int t = 0; t < 6; t++) {
            std::vector<int> perm(7);
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = 6; i > 0; i--) std::swap(perm[i], perm[rng.below(i + 1)]);
            std::vector<Edge> es;
            for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
            CHECK(oracle.solve(Graph(7, es)).stww == base);
        }
    }
}

TEST_CASE("node budget exhaustion throws instead of answering") {
    CHECK_THROWS_WITH_AS(stww_exact(petersen(), 10), doctest::Contains("budget"),
                         std::runtime_error);
}

TEST_CASE("petersen regression value") {
    // pinned from the exhaustive search itself (see the derivation note below)
    OracleResult res = stww_exact(petersen(), 400'000'000);
    CHECK(res.stww == 4);
    std::string reason;
    CHECK(verify(petersen(), res.witness, res.stww, &reason));
}
