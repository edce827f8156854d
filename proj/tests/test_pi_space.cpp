#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "test_util.hpp"
#include "tww/contraction_engine.hpp"
#include "tww/pi_space.hpp"

using namespace tww;

namespace {

PiParams params(int a, int b, int q, std::vector<int> r) {
    PiParams p;
    p.a = a;
    p.b = b;
    p.q = q;
    p.r = std::move(r);
    return p;
}

// adjacency by raw subsequence enumeration, independent of is_close
bool adjacent_oracle(const PiVertex& u, const PiVertex& v, const PiParams& p) {
    if (u == v) return false;
    int hits = 0;
    for (int i = 0; i < p.a; i++)
        if (u.comps[i] == v.comps[i] || test::close_bruteforce(u.comps[i], v.comps[i])) hits++;
    return hits >= p.b;
}

BigInt lemma_width_bound(const PiParams& p) {
    using boost::multiprecision::pow;
    int r = p.r_max();
    return pow(BigInt(r), 2 * static_cast<unsigned>(p.b)) *
           pow(BigInt(p.a), static_cast<unsigned>(p.b)) *
           pow(BigInt(p.q), static_cast<unsigned>(static_cast<long long>(p.a) * r -
                                                  static_cast<long long>(p.b) * (r - 1) + 1));
}

PiVertex random_vertex(const PiParams& p, Rng& rng) {
    PiVertex u;
    u.comps.resize(p.a);
    for (int i = 0; i < p.a; i++) {
        u.comps[i].resize(p.r[i]);
        for (auto& s : u.comps[i]) s = static_cast<int>(rng.below(p.q));
    }
    return u;
}

}  // namespace

TEST_CASE("pi adjacency basics") {
    PiParams p = params(2, 1, 2, {2, 2});
    PiVertex u{{{0, 0}, {0, 0}}};
    CHECK_FALSE(pi_adjacent(u, u, p));  // no self-adjacency
    PiVertex v{{{0, 1}, {1, 1}}};
    CHECK(pi_adjacent(u, v, p));  // first components share (0)
    PiVertex w{{{1, 1}, {1, 1}}};
    CHECK_FALSE(pi_adjacent(u, w, p));  // no component shares a subsequence
    CHECK_THROWS_AS(pi_adjacent(u, PiVertex{{{0}, {0, 0}}}, p), std::invalid_argument);
}

TEST_CASE("exhaustive 16-vertex adjacency matrix: symmetric, matches the oracle") {
    PiParams p = params(2, 2, 2, {2, 2});
    auto verts = pi_vertices(p, 4096);
    REQUIRE(verts.size() == 16);
    for (size_t i = 0; i < verts.size(); i++)
        for (size_t j = 0; j < verts.size(); j++) {
            bool lib = pi_adjacent(verts[i], verts[j], p);
            CHECK(lib == pi_adjacent(verts[j], verts[i], p));
            CHECK(lib == adjacent_oracle(verts[i], verts[j], p));
        }
}

TEST_CASE("degree bound formula values") {
    CHECK(pi_degree_bound(params(2, 1, 2, {2, 2}), 2) == 64);
    CHECK(pi_degree_bound(params(1, 1, 2, {1}), 1) == 2);
    CHECK_THROWS_AS(pi_degree_bound(params(2, 1, 2, {2, 3}), 2), std::invalid_argument);
}

TEST_CASE("enumerated max degree never exceeds the bound") {
    for (const auto& p :
         {params(2, 1, 2, {2, 2}), params(2, 2, 2, {2, 2}), params(1, 1, 3, {3}),
          params(3, 2, 2, {2, 1, 2}), params(2, 1, 3, {2, 2}), params(4, 3, 2, {1, 2, 1, 2})}) {
        Graph g = pi_graph(p, 4096);
        CHECK(BigInt(g.max_degree()) <= pi_degree_bound(p, p.r_max()));
    }
}

TEST_CASE("erase_last basics") {
    PiVertex u{{{1, 2, 3}, {4, 4}}};
    PiVertex v = erase_last(u, 0);
    CHECK(v == PiVertex{{{1, 2}, {4, 4}}});
    CHECK_THROWS_AS(erase_last(PiVertex{{{1}}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(erase_last(u, 5), std::invalid_argument);
}

TEST_CASE("erase_last maps close-or-equal pairs to close-or-equal pairs") {
    // exhaustive for q=2, r=3
    {
        PiParams p = params(1, 1, 2, {3});
        auto verts = pi_vertices(p, 4096);
        for (const auto& u : verts)
            for (const auto& v : verts) {
                if (!(u == v) && !is_close(u.comps[0], v.comps[0])) continue;
                PiVertex eu = erase_last(u, 0), ev = erase_last(v, 0);
                CHECK((eu == ev || is_close(eu.comps[0], ev.comps[0])));
            }
    }
    // sampled close pairs for q=3, r=4
    Rng rng(811);
    int built = 0;
    while (built < 10000) {
        SeqLabel s(4);
        for (auto& x : s) x = static_cast<int>(rng.below(3));
        // close partner: delete one position, insert a symbol elsewhere
        SeqLabel t = s;
        t.erase(t.begin() + rng.below(4));
        t.insert(t.begin() + rng.below(4), static_cast<int>(rng.below(3)));
        if (!is_close(s, t)) continue;  // defensive; construction should always be close
        built++;
        SeqLabel es(s.begin(), s.end() - 1), et(t.begin(), t.end() - 1);
        CHECK((es == et || is_close(es, et)));
    }
}

TEST_CASE("Pi(1,1;1,2) is K4 and contracts within the bound") {
    PiParams p = params(2, 1, 2, {1, 1});
    Graph g = pi_graph(p, 4096);
    REQUIRE(g.n() == 4);
    CHECK(g.m() == 6);  // r=1 components are always close, so the graph is complete
    ContractionSequence s = pi_contract_full(p, 4096);
    CHECK(s.length() == 3);
    ReplayResult r = replay(g, s);
    CHECK(r.width == 3);
    CHECK(BigInt(r.width) <= lemma_width_bound(p));
    CHECK(lemma_width_bound(p) == 16);
}

TEST_CASE("Pi(2;1,2) contracts within the bound") {
    PiParams p = params(1, 1, 2, {2});
    Graph g = pi_graph(p, 4096);
    REQUIRE(g.n() == 4);
    ContractionSequence s = pi_contract_full(p, 4096);
    CHECK(BigInt(replay(g, s).width) <= lemma_width_bound(p));
}

TEST_CASE("Pi(1;1,q) is complete with width q-1") {
    for (int q : {2, 3, 5}) {
        PiParams p = params(1, 1, q, {1});
        Graph g = pi_graph(p, 4096);
        CHECK(g.m() == q * (q - 1) / 2);
        ReplayResult r = replay(g, pi_contract_full(p, 4096));
        CHECK(r.width == q - 1);
        CHECK(BigInt(r.width) <= lemma_width_bound(p));
    }
}

TEST_CASE("full contraction stays within the width bound on assorted tuples") {
    for (const auto& p :
         {params(2, 1, 2, {2, 2}), params(2, 2, 3, {2, 1}), params(3, 1, 2, {2, 1, 2}),
          params(3, 3, 2, {2, 2, 2}), params(1, 1, 4, {3})}) {
        Graph g = pi_graph(p, 4096);
        ContractionSequence s = pi_contract_full(p, 4096);
        CHECK(s.initial_n == g.n());
        CHECK(BigInt(replay(g, s).width) <= lemma_width_bound(p));
    }
}

TEST_CASE("budget guard fires") {
    CHECK_THROWS_AS(pi_contract_full(params(2, 1, 10, {4, 4}), 4096), std::invalid_argument);
}

TEST_CASE("trajectory contraction on trivial images") {
    PiParams p = params(2, 1, 3, {2, 2});
    Rng rng(812);
    PiVertex solo = random_vertex(p, rng);
    ContractionSequence s = pi_trajectory_contract({solo}, p);
    CHECK(s.initial_n == 1);
    CHECK(s.length() == 0);
    CHECK_THROWS_AS(pi_trajectory_contract({solo, solo}, p), std::invalid_argument);
}

TEST_CASE("a full erasure fiber collapses in round one") {
    PiParams p = params(1, 1, 4, {2});
    std::vector<PiVertex> fiber;
    for (int x = 0; x < 4; x++) fiber.push_back(PiVertex{{{2, x}}});
    ContractionSequence s = pi_trajectory_contract(fiber, p);
    REQUIRE(s.length() == 3);
    // all three merges happen in the first round, folding into one vertex
    CHECK(s.merges[0] == Edge{0, 1});
    CHECK(s.merges[1] == Edge{4, 2});
    CHECK(s.merges[2] == Edge{5, 3});
}

TEST_CASE("restricted trajectories stay valid and within the full width") {
    PiParams p = params(2, 1, 3, {3, 3});  // 729 vertices
    auto verts = pi_vertices(p, 4096);
    Graph full_graph = pi_graph(p, 4096);
    int full_width = replay(full_graph, pi_contract_full(p, 4096)).width;

    for (Seed seed = 0; seed < 4; seed++) {
        Rng rng(mix_seed(813, seed));
        // sample 50 distinct vertices, keep lexicographic order
        std::set<size_t> chosen;
        while (chosen.size() < 50) chosen.insert(rng.below(verts.size()));
        std::vector<PiVertex> image;
        std::vector<size_t> idx(chosen.begin(), chosen.end());
        for (size_t i : idx) image.push_back(verts[i]);
        // induced subgraph via the adjacency oracle
        std::vector<Edge> edges;
        for (size_t i = 0; i < image.size(); i++)
            for (size_t j = i + 1; j < image.size(); j++)
                if (pi_adjacent(image[i], image[j], p))
                    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        Graph induced(static_cast<int>(image.size()), edges);
        ContractionSequence s = pi_trajectory_contract(image, p);
        ReplayResult r = replay(induced, s);
        CHECK(s.complete());
        CHECK(r.width <= full_width);
    }
}
