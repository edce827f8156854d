#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "test_util.hpp"
#include "tww/graph.hpp"
#include "tww/random_models.hpp"

using namespace tww;

namespace {

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; i++) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph path(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; i++) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; i++) {
        es.emplace_back(i, (i + 1) % 5);          // outer cycle
        es.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        es.emplace_back(i, i + 5);                // spokes
    }
    return Graph(10, std::move(es));
}

}  // namespace

TEST_CASE("graph construction validates invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("quotient of C4 by opposite pairs is K2") {
    Partition p;
    p.blocks = {{0, 1}, {2, 3}};
    Graph q = quotient(cycle(4), p);
    CHECK(q.n() == 2);
    CHECK(q.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("quotient by singletons is the identity") {
    for (Seed seed : {1u, 2u, 3u}) {
        Graph g = gen_gnm(9, 14, seed);
        CHECK(quotient(g, singleton_partition(9)) == g);
    }
}

TEST_CASE("petersen quotient by the spoke pairing matches the brute-force scan") {
    Graph g = petersen();
    Partition p;
    for (int i = 0; i < 5; i++) p.blocks.push_back({i, i + 5});
    CHECK(quotient(g, p) == test::quotient_bruteforce(g, p));
}

TEST_CASE("quotient rejects broken partitions by naming the vertex") {
    Graph g = cycle(4);
    Partition overlap;
    overlap.blocks = {{0, 1}, {1, 2, 3}};
    CHECK_THROWS_WITH_AS(quotient(g, overlap), doctest::Contains("vertex 1"),
                         std::invalid_argument);
    Partition gap;
    gap.blocks = {{0, 1}, {3}};
    CHECK_THROWS_WITH_AS(quotient(g, gap), doctest::Contains("vertex 2"), std::invalid_argument);
}

TEST_CASE("power of P4 at l=2") {
    Graph p2 = power(path(4), 2);
    CHECK(p2.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("power at l=1 is the identity") {
    Graph g = gen_gnm(10, 18, 77);
    CHECK(power(g, 1) == g);
}

TEST_CASE("power of C6 at l=3 equals the all-pairs BFS closure") {
    Graph g = cycle(6);
    Graph p3 = power(g, 3);
    auto dist = test::all_pairs_bfs(g);
    for (int u = 0; u < 6; u++)
        for (int v = u + 1; v < 6; v++)
            CHECK(p3.has_edge(u, v) == (dist[u][v] >= 1 && dist[u][v] <= 3));
    CHECK(p3 == complete(6));  // diameter of C6 is 3
}

TEST_CASE("degeneracy of standard graphs") {
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(degeneracy(star).first == 1);
    CHECK(degeneracy(path(7)).first == 1);
    CHECK(degeneracy(cycle(6)).first == 2);
    CHECK(degeneracy(complete(5)).first == 4);
    CHECK(degeneracy(Graph(3, {})).first == 0);
}

TEST_CASE("degeneracy ordering witnesses the value") {
    for (Seed seed = 0; seed < 20; seed++) {
        Graph g = gen_gnm(10, 20, seed);
        auto [w, order] = degeneracy(g);
        CHECK(w <= g.max_degree());
        std::vector<bool> removed(g.n(), false);
        for (int v : order) {
            int live_deg = 0;
            for (int x : g.neighbors(v))
                if (!removed[x]) live_deg++;
            CHECK(live_deg <= w);
            removed[v] = true;
        }
    }
}

TEST_CASE("replay of the C4 sequence gives trajectory 2,2,1,0") {
    ContractionSequence s;
    s.initial_n = 4;
    s.merges = {{0, 1}, {2, 3}, {4, 5}};
    ReplayResult r = replay(cycle(4), s);
    CHECK(r.width == 2);
    CHECK(r.trajectory == std::vector<int>{2, 2, 1, 0});
}

TEST_CASE("replay of K2 single merge") {
    ContractionSequence s;
    s.initial_n = 2;
    s.merges = {{0, 1}};
    CHECK(replay(complete(2), s).width == 1);
}

TEST_CASE("replay equals the from-scratch quotient recomputation") {
    for (Seed seed = 0; seed < 15; seed++) {
        Graph g = gen_gnp(8, 0.5, mix_seed(404, seed));
        ContractionSequence s = test::random_complete_sequence(8, seed);
        CHECK(replay(g, s).width == test::replay_width_by_quotients(g, s));
    }
}

TEST_CASE("replay rejects dead ids with the step index") {
    ContractionSequence s;
    s.initial_n = 4;
    s.merges = {{0, 1}, {1, 2}};  // 1 is dead at step 1
    CHECK_THROWS_WITH_AS(replay(cycle(4), s), doctest::Contains("step 1"), std::invalid_argument);
    s.merges = {{0, 9}};
    CHECK_THROWS_WITH_AS(replay(cycle(4), s), doctest::Contains("step 0"), std::invalid_argument);
}

TEST_CASE("replay width dominates the input max degree") {
    for (Seed seed = 0; seed < 10; seed++) {
        Graph g = gen_gnm(7, 10, mix_seed(7, seed));
        CHECK(replay(g, {7, {}}).width == g.max_degree());
        auto s = test::random_complete_sequence(7, seed);
        CHECK(replay(g, s).width >= g.max_degree());
    }
}

TEST_CASE("quotient of a subgraph is a subgraph of the quotient") {
    // restricted to partition chains induced by contraction sequences
    for (Seed seed = 0; seed < 25; seed++) {
        int n = 4 + static_cast<int>(seed % 4);
        Graph g = gen_gnp(n, 0.55, mix_seed(52, seed));
        // random spanning subgraph
        Rng rng(mix_seed(53, seed));
        std::vector<Edge> kept;
        for (auto e : g.edges())
            if (rng.below(2) == 0) kept.push_back(e);
        Graph h(n, kept);
        ContractionSequence s = test::random_complete_sequence(n, seed);
        // walk the chain via prefix partitions
        std::vector<std::vector<int>> members(2 * n);
        std::vector<bool> alive(2 * n, false);
        for (int v = 0; v < n; v++) {
            members[v] = {v};
            alive[v] = true;
        }
        for (int i = 0; i <= s.length(); i++) {
            Partition p;
            for (int id = 0; id < 2 * n; id++)
                if (alive[id]) p.blocks.push_back(members[id]);
            Graph qg = quotient(g, p), qh = quotient(h, p);
            for (auto e : qh.edges()) CHECK(qg.has_edge(e.first, e.second));
            if (i < s.length()) {
                auto [u, v] = s.merges[i];
                int w = n + i;
                members[w] = members[u];
                members[w].insert(members[w].end(), members[v].begin(), members[v].end());
                alive[u] = alive[v] = false;
                alive[w] = true;
            }
        }
    }
}

TEST_CASE("edge list and sequence files round-trip") {
    Graph g = gen_gnm(9, 13, 5);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);

    ContractionSequence s = test::random_complete_sequence(9, 5);
    std::stringstream ts;
    write_contraction_sequence(ts, s);
    ContractionSequence back = read_contraction_sequence(ts);
    CHECK(back.initial_n == s.initial_n);
    CHECK(back.merges == s.merges);
}
