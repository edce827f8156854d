#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "test_util.hpp"
#include "tww/density.hpp"
#include "tww/random_models.hpp"

using namespace tww;

namespace {

Graph cycle(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; i++) es.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(es));
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

long long edges_in(const Graph& g, const std::vector<int>& xs) {
    long long e = 0;
    for (size_t i = 0; i < xs.size(); i++)
        for (size_t j = i + 1; j < xs.size(); j++)
            if (g.has_edge(xs[i], xs[j])) e++;
    return e;
}

}  // namespace

TEST_CASE("mad of small named graphs") {
    CHECK(mad_exact(complete(4)).density == Rational(3, 1));
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(mad_exact(star).density == Rational(3, 2));
    CHECK(mad_exact(Graph(6, {})).density == Rational(0, 1));
    CHECK_THROWS_AS(mad_exact(Graph(0, {})), std::invalid_argument);
    CHECK(densest_bruteforce(cycle(5)).density == Rational(2, 1));
    Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(densest_bruteforce(p3).density == Rational(4, 3));
}

TEST_CASE("mad witness attains the reported density") {
    for (Seed s = 0; s < 20; s++) {
        Graph g = gen_gnm(12, 20, mix_seed(41, s));
        DensestResult res = mad_exact(g);
        CHECK_FALSE(res.witness.empty());
        CHECK(Rational(2 * edges_in(g, res.witness),
                       static_cast<long long>(res.witness.size())) == res.density);
    }
}

TEST_CASE("mad_exact equals densest_bruteforce on random graphs") {
    for (Seed s = 0; s < 60; s++) {
        int n = 4 + static_cast<int>(s % 11);
        long long maxm = static_cast<long long>(n) * (n - 1) / 2;
        Graph g = gen_gnm(n, (s * 37) % (maxm + 1), mix_seed(42, s));
        CHECK(mad_exact(g).density == densest_bruteforce(g).density);
    }
}

TEST_CASE("K5 minus an edge, computed not assumed") {
    std::vector<Edge> es;
    for (int i = 0; i < 5; i++)
        for (int j = i + 1; j < 5; j++)
            if (!(i == 0 && j == 1)) es.emplace_back(i, j);
    Graph g(5, es);
    CHECK(mad_exact(g).density == densest_bruteforce(g).density);
}

TEST_CASE("mad of d-regular graphs is exactly d") {
    for (int d : {2, 3, 4}) {
        for (Seed s = 0; s < 8; s++) {
            int n = 10 + 2 * static_cast<int>(s);
            Graph g = gen_regular(n, d, mix_seed(43 + d, s));
            CHECK(mad_exact(g).density == Rational(d, 1));
        }
    }
}

TEST_CASE("mad dominates the global average degree") {
    for (Seed s = 0; s < 20; s++) {
        Graph g = gen_gnm(13, 18, mix_seed(44, s));
        CHECK(mad_exact(g).density >= Rational(2 * g.m(), g.n()));
    }
}

TEST_CASE("mad is monotone under edge addition") {
    for (Seed s = 0; s < 15; s++) {
        Graph g = gen_gnm(10, 15, mix_seed(45, s));
        Rational before = mad_exact(g).density;
        // add the first absent pair
        for (int u = 0; u < g.n(); u++) {
            bool added = false;
            for (int v = u + 1; v < g.n(); v++)
                if (!g.has_edge(u, v)) {
                    auto es = g.edges();
                    es.emplace_back(u, v);
                    CHECK(mad_exact(Graph(g.n(), es)).density >= before);
                    added = true;
                    break;
                }
            if (added) break;
        }
    }
}

TEST_CASE("brute force guard") {
    CHECK_THROWS_AS(densest_bruteforce(Graph(25, {})), std::invalid_argument);
    CHECK_THROWS_AS(check_alpha_balanced(Graph(25, {}), Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(check_xlogx(Graph(25, {}), Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("alpha-balance of named graphs") {
    CHECK(check_alpha_balanced(cycle(6), Rational(1, 2)));
    // K4 plus 8 isolated vertices: X = V(K4) has 6 > (6/12)*4 edges
    Graph g(12, complete(4).edges());
    CHECK_FALSE(check_alpha_balanced(g, Rational(1, 2)));
}

TEST_CASE("alpha-balance agrees with an independent subset enumeration") {
    for (Seed s = 0; s < 10; s++) {
        Graph g = gen_gnm(14, 21, mix_seed(46, s));
        Rational alpha(1, 4);
        bool expected = true;
        // recursive subset walk, distinct traversal from the library's mask loop
        std::vector<int> chosen;
        auto rec = [&](auto&& self, int v) -> void {
            if (!expected) return;
            if (v == g.n()) {
                if (chosen.empty()) return;
                if (static_cast<long long>(chosen.size()) * alpha.den * 1LL >
                    alpha.num * static_cast<long long>(g.n() - 1))
                    return;
                if (edges_in(g, chosen) * g.n() > static_cast<long long>(g.m()) * chosen.size())
                    expected = false;
                return;
            }
            self(self, v + 1);
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        };
        rec(rec, 0);
        CHECK(check_alpha_balanced(g, alpha) == expected);
    }
}

TEST_CASE("xlogx checker on named graphs") {
    CHECK(check_xlogx(Graph(10, {}), Rational(1, 3)));
    CHECK_FALSE(check_xlogx(complete(6), Rational(1, 2)));
}

TEST_CASE("xlogx agrees with an independent subset enumeration") {
    for (Seed s = 0; s < 10; s++) {
        Graph g = gen_gnm(12, 14, mix_seed(47, s));
        Rational alpha(1, 3);
        bool expected = true;
        for (std::uint32_t x = 1; x < (1u << 12); x++) {
            std::vector<int> xs;
            for (int v = 0; v < 12; v++)
                if (x >> v & 1) xs.push_back(v);
            long long sz = xs.size();
            if ((sz - 1) * alpha.den < alpha.num * 12) continue;
            double bound = 0.1 * sz * std::log(static_cast<double>(sz));
            if (static_cast<double>(edges_in(g, xs)) > bound + 1e-9) expected = false;
        }
        CHECK(check_xlogx(g, alpha) == expected);
    }
}
