#pragma once

#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/pi_space.hpp"
#include "tww/random_models.hpp"
#include "tww/rational.hpp"

namespace tww {

/// Parameters steering the labeling pipeline. kappa/ell are informational
/// once a,b,r,q are fixed; clamp flags record where the closed-form choice
/// was overridden to stay in a usable range.
struct PipelineParams {
    int a = 0, b = 0, r = 0, q = 0;
    double kappa = 0.0;
    double ell = 0.0;
    Rational d;                 // density the parameters were chosen for
    int max_retries = 32;
    long long target_m = 0;     // 0 = derive ceil(3 v(G) / q^(a r)) at run time
    bool r_clamped = false;
    bool q_clamped = false;
};

/// Closed-form parameter choice from ell = log v(G) and d = mad(G):
///   b = ceil(sqrt(ell)/(d log ell)), a = ceil(d b / 2),
///   r = floor(ell/(2 d b log ell)) clamped to >= 2,
///   kappa = ell/((2a-b) r), q = max(2, ceil(e^kappa)) capped at q_cap.
/// Requires d > 2; the d <= 2 regime is not routed through the pipeline.
PipelineParams select_params(double ell, const Rational& d, long long q_cap = 1000000);
PipelineParams select_params_for(long long n, const Rational& d, long long q_cap = 1000000);

struct HomContraction {
    ContractionSequence prefix;  // fiber merges, ascending image id
    Graph image;                 // the quotient; vertex j = j-th image id
};

/// Merges every fiber of the map to a single vertex. fiber_of[v] is an
/// arbitrary image id; block j of the result is the j-th distinct id in
/// ascending order.
HomContraction contract_via_hom(const Graph& g, const std::vector<int>& fiber_of);

struct PipelineReport {
    ContractionSequence sequence;
    int width = 0;
    long long m_phi = 0;   // largest fiber of the chosen labeling
    int retries_used = 0;  // sampling attempts beyond the first
    PipelineParams params;
    int prefix_length = 0;
    int prefix_width = 0;  // max degree during the fiber-merge prefix
    int image_size = 0;    // number of distinct labels
    bool target_reached = false;
    bool theory_precondition = false;  // v(G) >= 6 r a q^(ar+1) Delta^(3r)
};

/// The full upper-bound pipeline: factor g into outdegree-one orientations,
/// label each factor, sample random symbol maps (retrying for the smallest
/// max fiber), contract fibers, then finish inside the product space.
/// Every edge is checked to land on adjacent-or-equal labels before any
/// merge happens.
PipelineReport build_pipeline(const Graph& g, const PipelineParams& p, Seed seed);

/// True iff s is well-formed, reaches a single vertex, and replays with
/// width at most w. Malformed input yields false and a reason, never a throw.
bool verify(const Graph& g, const ContractionSequence& s, long long w,
            std::string* reason = nullptr);

/// Fallback for the d <= 2 regime: repeatedly merge a minimum-degree vertex
/// into a minimum-degree neighbour.
ContractionSequence greedy_contract(const Graph& g);

}  // namespace tww
