#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tww {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Value-semantic and immutable
/// after construction; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // canonical: u < v, sorted
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Partition of {0..n-1} into nonempty disjoint blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;
    int size() const { return static_cast<int>(blocks.size()); }
};

Partition singleton_partition(int n);

/// Ordered vertex merges; merge i fuses two live ids into fresh id initial_n + i.
struct ContractionSequence {
    int initial_n = 0;
    std::vector<Edge> merges;

    int length() const { return static_cast<int>(merges.size()); }
    bool complete() const { return initial_n >= 1 && length() == initial_n - 1; }
};

struct ReplayResult {
    int width = 0;                // max over all intermediate graphs of their max degree
    std::vector<int> trajectory;  // trajectory[0] = max degree of the input graph
};

/// Quotient of g by p: blocks adjacent iff some edge of g crosses them.
Graph quotient(const Graph& g, const Partition& p);

/// l-th power: u,v adjacent iff 1 <= dist_g(u,v) <= l.
Graph power(const Graph& g, int l);

/// Degeneracy and a min-degree elimination ordering witnessing it.
std::pair<int, std::vector<int>> degeneracy(const Graph& g);

/// Replays s on g per the identification rule: the fused vertex is adjacent
/// to x iff either merged endpoint was. Throws on dead/out-of-range ids,
/// naming the failing step.
ReplayResult replay(const Graph& g, const ContractionSequence& s);

// Edge-list text format: "n m" then m lines "u v" (canonicalized u<v on write).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const Graph& g);

// Contraction-sequence text format: "n k" then k lines "u v".
ContractionSequence read_contraction_sequence(std::istream& in);
void write_contraction_sequence(std::ostream& out, const ContractionSequence& s);
ContractionSequence load_contraction_sequence(const std::string& path);
void save_contraction_sequence(const std::string& path, const ContractionSequence& s);

}  // namespace tww
