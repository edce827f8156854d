#pragma once

#include <vector>

#include "tww/graph.hpp"

namespace tww {

/// The coarsening chain P_1..P_n induced by a complete contraction sequence:
/// |P_i| = n-i+1, each partition coarsens the previous one, and the quotients
/// replay the sequence. Blocks are ordered by the live id that represents
/// them, so quotient(g, chain[i]) matches the i-th replay graph vertex for
/// vertex.
std::vector<Partition> partition_chain(const Graph& g, const ContractionSequence& s);

/// Balanced-partition extraction: at most K parts, every part of size at
/// most 2 v(g)/K, and the quotient is (replay width)-degenerate. Requires a
/// complete valid sequence and 1 <= K < v(g).
Partition extract_partition(const Graph& g, const ContractionSequence& s, int K);

struct CountingConstants {
    long long C0 = 24000;
    double C1 = 0.0;  // existential in the source material; always caller-supplied
    double epsilon = 0.0;
    double delta = 0.0;
    double alpha = 0.0;
};

double alpha_for(double eps);                   // (1/4) e^{-4/eps}
double delta_for(double alpha, long long C0);   // alpha^{3/2} 4^{-2/alpha} / (12 C0)

/// log of the count bound m * (log C0 + log eps + 2 log n - log m), plus the
/// internal quantities w and K it hides. Uses d = 2m/n.
struct StwwCountBound {
    double log_count = 0.0;
    double d = 0.0;
    double w = 0.0;  // floor(eps * d * (n/log n)^((d-2)/(2d-2)))
    double K = 0.0;  // floor(d^2 n / (w log n))
};
StwwCountBound count_stww_upper(long long n, long long m, double eps,
                                const CountingConstants& c);

/// log of (C1 n/d)^(dn/2). Requires dn even and d <= log n.
double count_regular_lower(long long n, int d, const CountingConstants& c);

/// log of (2 C0 eps / C1)^(dn/2); hits the exact log(2/3) branch when the
/// inputs satisfy 3 C0 eps == C1 in machine arithmetic.
double probability_ratio(long long n, int d, const CountingConstants& c);

struct BoundReport {
    double exponent = 0.0;     // (d-2)/(2d-2)
    double lower_value = 0.0;  // eps * d * n^exponent / sqrt(log n)
    double upper_value = 0.0;  // n^exponent * exp(C (sqrt(log n) log log n / d + log d))
};
/// Hidden constants are inputs, never invented here.
BoundReport bound_report(double n, double d, double eps, double C);

}  // namespace tww
