#include "tww/factorization.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <stdexcept>

#include "tww/density.hpp"

namespace tww {

std::vector<Edge> FunctionalOrientation::underlying_edges() const {
    std::vector<Edge> es;
    for (int v = 0; v < n; v++)
        if (out[v] != -1) es.emplace_back(std::min(v, out[v]), std::max(v, out[v]));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

Graph FunctionalOrientation::underlying_graph() const {
    return Graph(n, underlying_edges());
}

namespace {

// Hopcroft-Karp on left = V x [a], right = E x [b]; (v,i) -- (e,j) iff v is
// an endpoint of e. Index scan order is by index, so the matching is
// deterministic. Returns matched left vertex per right slot.
class SlotMatcher {
public:
    SlotMatcher(const Graph& g, int a, int b)
        : g_(g), a_(a), b_(b), nl_(static_cast<size_t>(g.n()) * a),
          nr_(static_cast<size_t>(g.m()) * b), match_l_(nl_, -1), match_r_(nr_, -1),
          dist_(nl_) {}

    bool saturate_right() {
        while (bfs()) {
            for (size_t l = 0; l < nl_; l++)
                if (match_l_[l] == -1) dfs(l);
        }
        for (size_t r = 0; r < nr_; r++)
            if (match_r_[r] == -1) return false;
        return true;
    }

    const std::vector<long long>& right_match() const { return match_r_; }

private:
    static constexpr int UNSET = std::numeric_limits<int>::max();

    // left (v,i) <-> v*a + i ; right (e,j) <-> e*b + j
    long long left_vertex(size_t l) const { return static_cast<long long>(l) / a_; }

    template <typename F>
    void for_right_neighbors(size_t l, F&& f) const {
        int v = static_cast<int>(left_vertex(l));
        for (int e : incident_[v])
            for (int j = 0; j < b_; j++) f(static_cast<size_t>(e) * b_ + j);
    }

    bool bfs() {
        if (incident_.empty()) {
            incident_.resize(g_.n());
            for (int e = 0; e < g_.m(); e++) {
                incident_[g_.edges()[e].first].push_back(e);
                incident_[g_.edges()[e].second].push_back(e);
            }
        }
        std::queue<size_t> q;
        bool found = false;
        std::fill(dist_.begin(), dist_.end(), UNSET);
        for (size_t l = 0; l < nl_; l++)
            if (match_l_[l] == -1) {
                dist_[l] = 0;
                q.push(l);
            }
        while (!q.empty()) {
            size_t l = q.front();
            q.pop();
            for_right_neighbors(l, [&](size_t r) {
                long long nxt = match_r_[r];
                if (nxt == -1) {
                    found = true;
                } else if (dist_[nxt] == UNSET) {
                    dist_[nxt] = dist_[l] + 1;
                    q.push(static_cast<size_t>(nxt));
                }
            });
        }
        return found;
    }

    bool dfs(size_t l) {
        bool advanced = false;
        for_right_neighbors(l, [&](size_t r) {
            if (advanced) return;
            long long nxt = match_r_[r];
            if (nxt == -1 || (dist_[nxt] == dist_[l] + 1 && dfs(static_cast<size_t>(nxt)))) {
                match_l_[l] = static_cast<long long>(r);
                match_r_[r] = static_cast<long long>(l);
                advanced = true;
            }
        });
        if (!advanced) dist_[l] = UNSET;
        return advanced;
    }

    const Graph& g_;
    int a_, b_;
    size_t nl_, nr_;
    std::vector<long long> match_l_, match_r_;
    std::vector<int> dist_;
    std::vector<std::vector<int>> incident_;
};

}  // namespace

std::vector<FunctionalOrientation> decompose(const Graph& g, int a, int b) {
    if (b < 1 || a < b) throw std::invalid_argument("decompose: need a >= b >= 1");
    if (g.m() > 0) {
        DensestResult mad = mad_exact(g);
        // a/b >= mad/2, exact: 2 a den >= num b
        if (static_cast<__int128>(2) * a * mad.density.den <
            static_cast<__int128>(mad.density.num) * b) {
            std::string wit;
            for (size_t i = 0; i < std::min<size_t>(mad.witness.size(), 16); i++)
                wit += (i ? "," : "") + std::to_string(mad.witness[i]);
            if (mad.witness.size() > 16) wit += ",...";
            throw std::invalid_argument("decompose: a/b = " + std::to_string(a) + "/" +
                                        std::to_string(b) + " < mad/2 with mad = " +
                                        mad.density.str() + " witnessed by {" + wit + "}");
        }
    }

    std::vector<FunctionalOrientation> out(a);
    for (auto& o : out) {
        o.n = g.n();
        o.out.assign(g.n(), -1);
    }
    if (g.m() == 0) return out;

    SlotMatcher matcher(g, a, b);
    if (!matcher.saturate_right())
        throw std::runtime_error(
            "decompose: internal matching failed to saturate edge slots; unreachable when "
            "a/b >= mad/2 holds");

    // The matching pins each edge slot to an endpoint. Slot (e,j) matched to
    // (v,i) contributes the arc v -> other(e); the matched i is discarded and
    // orientation indices are reassigned by properly edge-coloring the
    // vertex/edge incidence multigraph with a colors (degrees are <= a on
    // both sides). Proper colors mean: at most one arc per vertex per
    // orientation, and the b slots of an edge land in b distinct orientations.
    int n = g.n(), m = g.m();
    const auto& match_r = matcher.right_match();
    struct Copy {
        int tail;  // arc tail vertex
        int edge;
    };
    std::vector<Copy> copies;
    copies.reserve(static_cast<size_t>(m) * b);
    for (int e = 0; e < m; e++)
        for (int j = 0; j < b; j++) {
            long long l = match_r[static_cast<size_t>(e) * b + j];
            assert(l >= 0);
            copies.push_back({static_cast<int>(l / a), e});
        }

    std::vector<std::vector<int>> vertex_color(n, std::vector<int>(a, -1));  // -> copy id
    std::vector<std::vector<int>> edge_color(m, std::vector<int>(a, -1));
    std::vector<int> color_of(copies.size(), -1);

    auto free_color = [a](const std::vector<int>& used) {
        for (int c = 0; c < a; c++)
            if (used[c] == -1) return c;
        return -1;
    };
    auto place = [&](int id, int c) {
        color_of[id] = c;
        assert(vertex_color[copies[id].tail][c] == -1 && edge_color[copies[id].edge][c] == -1);
        vertex_color[copies[id].tail][c] = id;
        edge_color[copies[id].edge][c] = id;
    };

    for (int id = 0; id < static_cast<int>(copies.size()); id++) {
        int v = copies[id].tail, e = copies[id].edge;
        int cv = free_color(vertex_color[v]);
        int ce = free_color(edge_color[e]);
        assert(cv != -1 && ce != -1);
        if (edge_color[e][cv] == -1) {
            place(id, cv);
            continue;
        }
        if (vertex_color[v][ce] == -1) {
            place(id, ce);
            continue;
        }
        // Flip the cv/ce-alternating path starting at e. It is a simple path
        // (the two-color subgraph has max degree 2 and e lacks ce), and it
        // cannot reach v: every vertex it enters is entered through cv, which
        // v does not carry. After the flip cv is free at both v and e.
        std::vector<int> path;
        int cur = edge_color[e][cv];
        bool via_vertex = true;  // next hop leaves the tail vertex of `cur`
        while (cur != -1) {
            path.push_back(cur);
            if (via_vertex)
                cur = vertex_color[copies[cur].tail][ce];
            else
                cur = edge_color[copies[cur].edge][cv];
            via_vertex = !via_vertex;
        }
        for (int pid : path) {
            int c = color_of[pid];
            vertex_color[copies[pid].tail][c] = -1;
            edge_color[copies[pid].edge][c] = -1;
        }
        for (int pid : path) place(pid, color_of[pid] == cv ? ce : cv);
        place(id, cv);
    }

    for (int id = 0; id < static_cast<int>(copies.size()); id++) {
        int c = color_of[id];
        assert(c >= 0 && c < a);
        int v = copies[id].tail, e = copies[id].edge;
        int head = g.edges()[e].first == v ? g.edges()[e].second : g.edges()[e].first;
        assert(out[c].out[v] == -1);
        out[c].out[v] = head;
    }
    return out;
}

}  // namespace tww
