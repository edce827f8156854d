#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "tww/graph.hpp"
#include "tww/sequence_labeling.hpp"

namespace tww {

using BigInt = boost::multiprecision::cpp_int;

/// Parameters of the product family Pi(r_1..r_a; b, q).
struct PiParams {
    int a = 0;  // number of components
    int b = 0;  // how many components must be close for adjacency
    int q = 0;  // alphabet size, >= 2
    std::vector<int> r;  // per-component sequence lengths

    void validate() const;
    long long total_length() const;  // sum of r_i
    int r_max() const;
    BigInt vertex_count() const;     // q^(sum r_i)
};

/// One vertex of Pi: an a-tuple of sequences, comps[i] in [q]^{r_i}.
/// Symbols are 0-based, i.e. in {0..q-1}.
struct PiVertex {
    std::vector<SeqLabel> comps;
    auto operator<=>(const PiVertex&) const = default;
};

/// Adjacency oracle: u != v and at least b components are close or equal.
bool pi_adjacent(const PiVertex& u, const PiVertex& v, const PiParams& p);

/// Exact value of r_max^{2b} * a^b * q^{a r_max - b (r_max - 1)}.
BigInt pi_degree_bound(const PiParams& p, int r_max);

/// Drops the final symbol of component i. Requires r_i >= 2.
PiVertex erase_last(const PiVertex& u, int comp);

/// All vertices of Pi in lexicographic order. Guarded: vertex count <= budget.
std::vector<PiVertex> pi_vertices(const PiParams& p, long long budget);

/// Materialized Pi as a Graph (vertex i = i-th vertex of pi_vertices).
/// Test-scale only, guarded by budget.
Graph pi_graph(const PiParams& p, long long budget);

/// Full contraction sequence for Pi built by iterated last-symbol erasure:
/// components are reduced in index order, one column at a time, merging each
/// erasure fiber; once every component has length 1 the survivors are merged
/// in lexicographic order.
ContractionSequence pi_contract_full(const PiParams& p, long long budget);

/// The same merge schedule restricted to the given distinct vertices; yields
/// a full contraction sequence for the induced subgraph of Pi on `image`
/// (vertex i of the sequence = image[i]).
ContractionSequence pi_trajectory_contract(const std::vector<PiVertex>& image,
                                           const PiParams& p);

}  // namespace tww
