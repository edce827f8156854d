#include "tww/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace tww {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("graph: parallel edge " + std::to_string(dup->first) + " " +
                                    std::to_string(dup->second));
    edges_ = std::move(edges);
    adj_.resize(n_);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Partition singleton_partition(int n) {
    Partition p;
    p.blocks.reserve(n);
    for (int v = 0; v < n; v++) p.blocks.push_back({v});
    return p;
}

namespace {

// block id per vertex, validating disjointness and coverage
std::vector<int> block_map(const Graph& g, const Partition& p) {
    std::vector<int> of(g.n(), -1);
    for (int b = 0; b < p.size(); b++) {
        if (p.blocks[b].empty()) throw std::invalid_argument("partition: empty block");
        for (int v : p.blocks[b]) {
            if (v < 0 || v >= g.n())
                throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                            " out of range");
            if (of[v] != -1)
                throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                            " appears in two blocks");
            of[v] = b;
        }
    }
    for (int v = 0; v < g.n(); v++)
        if (of[v] == -1)
            throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                        " not covered");
    return of;
}

}  // namespace

Graph quotient(const Graph& g, const Partition& p) {
    std::vector<int> of = block_map(g, p);
    std::vector<Edge> qedges;
    for (const auto& [u, v] : g.edges()) {
        int bu = of[u], bv = of[v];
        if (bu != bv) qedges.emplace_back(std::min(bu, bv), std::max(bu, bv));
    }
    std::sort(qedges.begin(), qedges.end());
    qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
    return Graph(p.size(), std::move(qedges));
}

Graph power(const Graph& g, int l) {
    if (l < 1) throw std::invalid_argument("power: l must be >= 1");
    std::vector<Edge> pedges;
    std::vector<int> dist(g.n());
    for (int s = 0; s < g.n(); s++) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            if (dist[u] == l) continue;
            for (int w : g.neighbors(u))
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    bfs.push(w);
                }
        }
        for (int v = s + 1; v < g.n(); v++)
            if (dist[v] >= 1) pedges.emplace_back(s, v);
    }
    return Graph(g.n(), std::move(pedges));
}

std::pair<int, std::vector<int>> degeneracy(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    std::vector<std::vector<int>> bucket(n + 1);
    for (int v = 0; v < n; v++) {
        deg[v] = g.degree(v);
        bucket[deg[v]].push_back(v);
    }
    order.reserve(n);
    int w = 0, d = 0;
    for (int it = 0; it < n; it++) {
        int v = -1;
        while (v == -1) {
            while (d <= n && bucket[d].empty()) d++;
            assert(d <= n);
            int cand = bucket[d].back();
            bucket[d].pop_back();
            if (!removed[cand] && deg[cand] == d) v = cand;  // skip stale entries
        }
        w = std::max(w, d);
        removed[v] = true;
        order.push_back(v);
        for (int x : g.neighbors(v))
            if (!removed[x]) {
                deg[x]--;
                bucket[deg[x]].push_back(x);
            }
        if (d > 0) d--;  // removal can lower the minimum degree by at most one
    }
    return {w, order};
}

namespace {

// Incremental merge engine over live adjacency lists. Fresh ids grow upward,
// so push_back keeps neighbor lists sorted when inserting the newest vertex.
class Replayer {
public:
    explicit Replayer(const Graph& g, int merge_count)
        : n0_(g.n()), live_count_(g.n()), alive_(g.n() + merge_count, false),
          adj_(g.n() + merge_count), hist_(g.n() + merge_count + 2, 0) {
        for (int v = 0; v < n0_; v++) {
            alive_[v] = true;
            adj_[v] = g.neighbors(v);
            hist_[adj_[v].size()]++;
        }
        max_deg_ = g.max_degree();
    }

    int merge(int u, int v, int step) {
        int w = n0_ + step;
        auto bad = [&](int x) {
            return x < 0 || x >= w || !alive_[x];
        };
        if (u == v || bad(u) || bad(v))
            throw std::invalid_argument("sequence: step " + std::to_string(step) +
                                        " merges dead or invalid vertex pair (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        std::vector<int> merged;
        std::set_union(adj_[u].begin(), adj_[u].end(), adj_[v].begin(), adj_[v].end(),
                       std::back_inserter(merged));
        std::erase_if(merged, [&](int x) { return x == u || x == v; });
        drop(u);
        drop(v);
        for (int x : merged) {
            hist_[adj_[x].size()]--;
            remove_neighbor(x, u);
            remove_neighbor(x, v);
            adj_[x].push_back(w);
            bump(adj_[x].size());
        }
        alive_[w] = true;
        adj_[w] = std::move(merged);
        bump(adj_[w].size());
        live_count_--;
        while (max_deg_ > 0 && hist_[max_deg_] == 0) max_deg_--;
        return max_deg_;
    }

    int max_degree() const { return max_deg_; }
    int live_count() const { return live_count_; }
    std::vector<int> live_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(alive_.size()); v++)
            if (alive_[v]) out.push_back(v);
        return out;
    }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

private:
    void drop(int v) {
        hist_[adj_[v].size()]--;
        alive_[v] = false;
        adj_[v].clear();
        adj_[v].shrink_to_fit();
    }
    void remove_neighbor(int x, int gone) {
        auto it = std::lower_bound(adj_[x].begin(), adj_[x].end(), gone);
        if (it != adj_[x].end() && *it == gone) adj_[x].erase(it);
    }
    void bump(size_t d) {
        hist_[d]++;
        if (static_cast<int>(d) > max_deg_) max_deg_ = static_cast<int>(d);
    }

    int n0_, live_count_, max_deg_ = 0;
    std::vector<bool> alive_;
    std::vector<std::vector<int>> adj_;
    std::vector<long long> hist_;
};

}  // namespace

ReplayResult replay(const Graph& g, const ContractionSequence& s) {
    if (s.initial_n != g.n())
        throw std::invalid_argument("sequence: initial_n " + std::to_string(s.initial_n) +
                                    " does not match graph order " + std::to_string(g.n()));
    if (s.length() > std::max(0, g.n() - 1))
        throw std::invalid_argument("sequence: more merges than vertices allow");
    Replayer rp(g, s.length());
    ReplayResult res;
    res.trajectory.reserve(s.length() + 1);
    res.trajectory.push_back(rp.max_degree());
    for (int i = 0; i < s.length(); i++)
        res.trajectory.push_back(rp.merge(s.merges[i].first, s.merges[i].second, i));
    res.width = *std::max_element(res.trajectory.begin(), res.trajectory.end());
    return res;
}

Graph read_edge_list(std::istream& in) {
    long long n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; i++) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: truncated at edge " + std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << " " << g.m() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_edge_list(in);
}

void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    write_edge_list(out, g);
}

ContractionSequence read_contraction_sequence(std::istream& in) {
    long long n, k;
    if (!(in >> n >> k)) throw std::invalid_argument("sequence file: missing header");
    ContractionSequence s;
    s.initial_n = static_cast<int>(n);
    s.merges.reserve(k);
    for (long long i = 0; i < k; i++) {
        long long u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("sequence file: truncated at merge " + std::to_string(i));
        s.merges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return s;
}

void write_contraction_sequence(std::ostream& out, const ContractionSequence& s) {
    out << s.initial_n << " " << s.length() << "\n";
    for (const auto& [u, v] : s.merges) out << u << " " << v << "\n";
}

ContractionSequence load_contraction_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_contraction_sequence(in);
}

void save_contraction_sequence(const std::string& path, const ContractionSequence& s) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    write_contraction_sequence(out, s);
}

}  // namespace tww
