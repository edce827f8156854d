#pragma once

#include <vector>

#include "tww/graph.hpp"
#include "tww/rational.hpp"

namespace tww {

/// Exact 2e(H)/v(H) value in lowest terms.
using Density = Rational;

struct DensestResult {
    Density density;           // mad contribution 2e(g[X])/|X|
    std::vector<int> witness;  // maximizing vertex set X, sorted
};

/// Exact maximum average degree with a maximizing vertex set. Parametric
/// max-flow; all comparisons are exact rationals.
DensestResult mad_exact(const Graph& g);

/// Exhaustive subset-scan oracle. Guarded to v(g) <= 24.
DensestResult densest_bruteforce(const Graph& g);

/// True iff every X with |X| <= alpha*(n-1) spans at most (m/n)|X| edges.
/// Exhaustive, guarded to v(g) <= 24.
bool check_alpha_balanced(const Graph& g, const Rational& alpha);

/// True iff every X with |X| >= alpha*n + 1 spans at most (1/10)|X| ln|X|
/// edges. Floating comparison with 1e-9 boundary tolerance; guarded to 24.
bool check_xlogx(const Graph& g, const Rational& alpha);

}  // namespace tww
