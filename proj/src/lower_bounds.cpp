#include "tww/lower_bounds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tww {

std::vector<Partition> partition_chain(const Graph& g, const ContractionSequence& s) {
    if (s.initial_n != g.n())
        throw std::invalid_argument("partition_chain: sequence does not match graph");
    int n = g.n();
    // members[id] = original vertices fused into live id
    std::vector<std::vector<int>> members(n + s.length());
    std::vector<bool> alive(n + s.length(), false);
    for (int v = 0; v < n; v++) {
        members[v] = {v};
        alive[v] = true;
    }
    std::vector<Partition> chain;
    chain.reserve(s.length() + 1);
    auto snapshot = [&] {
        Partition p;
        for (size_t id = 0; id < members.size(); id++)
            if (alive[id]) p.blocks.push_back(members[id]);
        chain.push_back(std::move(p));
    };
    snapshot();
    for (int i = 0; i < s.length(); i++) {
        auto [u, v] = s.merges[i];
        int w = n + i;
        if (u < 0 || v < 0 || u >= w || v >= w || u == v || !alive[u] || !alive[v])
            throw std::invalid_argument("partition_chain: invalid merge at step " +
                                        std::to_string(i));
        members[w] = members[u];
        members[w].insert(members[w].end(), members[v].begin(), members[v].end());
        std::sort(members[w].begin(), members[w].end());
        alive[u] = alive[v] = false;
        alive[w] = true;
        snapshot();
    }
    return chain;
}

Partition extract_partition(const Graph& g, const ContractionSequence& s, int K) {
    int n = g.n();
    if (K < 1 || K >= n)
        throw std::invalid_argument("extract_partition: need 1 <= K < v(g)");
    if (!s.complete() || s.initial_n != n)
        throw std::invalid_argument("extract_partition: sequence must be complete for g");
    replay(g, s);  // validates the merge structure

    std::vector<bool> used(n, false);
    int remaining = n;
    Partition out;
    while (remaining > 0) {
        // Stream the chain afresh and stop at the minimal index whose
        // surviving part reaches size n/K. Singleton parts never qualify
        // (K < n), and each merge enlarges exactly one part, so the first
        // qualifying part is always the freshly fused one.
        std::vector<std::vector<int>> members(n + s.length());
        std::vector<int> surviving(n + s.length(), 0);
        for (int v = 0; v < n; v++) {
            members[v] = {v};
            surviving[v] = used[v] ? 0 : 1;
        }
        std::vector<int> pick;
        for (int i = 0; i < s.length() && pick.empty(); i++) {
            auto [u, v] = s.merges[i];
            int w = n + i;
            members[w] = std::move(members[u]);
            members[w].insert(members[w].end(), members[v].begin(), members[v].end());
            surviving[w] = surviving[u] + surviving[v];
            // surviving size >= n/K, exact comparison
            if (static_cast<long long>(surviving[w]) * K >= n) {
                for (int x : members[w])
                    if (!used[x]) pick.push_back(x);
            }
        }
        if (pick.empty()) {
            // no index qualifies: take the sole surviving part of the final partition
            for (int v = 0; v < n; v++)
                if (!used[v]) pick.push_back(v);
        }
        std::sort(pick.begin(), pick.end());
        for (int v : pick) used[v] = true;
        remaining -= static_cast<int>(pick.size());
        out.blocks.push_back(std::move(pick));
    }
    return out;
}

double alpha_for(double eps) {
    if (eps <= 0) throw std::invalid_argument("alpha_for: eps must be positive");
    return 0.25 * std::exp(-4.0 / eps);
}

double delta_for(double alpha, long long C0) {
    if (alpha <= 0 || C0 <= 0) throw std::invalid_argument("delta_for: positive inputs required");
    return std::pow(alpha, 1.5) * std::pow(4.0, -2.0 / alpha) / (12.0 * static_cast<double>(C0));
}

StwwCountBound count_stww_upper(long long n, long long m, double eps,
                                const CountingConstants& c) {
    if (m < 1) throw std::invalid_argument("count_stww_upper: need m >= 1");
    StwwCountBound out;
    double nn = static_cast<double>(n), mm = static_cast<double>(m);
    out.log_count = mm * (std::log(static_cast<double>(c.C0)) + std::log(eps) +
                          2.0 * std::log(nn) - std::log(mm));
    out.d = 2.0 * mm / nn;
    double expo = (out.d - 2.0) / (2.0 * out.d - 2.0);
    out.w = std::floor(eps * out.d * std::pow(nn / std::log(nn), expo));
    out.K = out.w > 0 ? std::floor(out.d * out.d * nn / (out.w * std::log(nn))) : 0.0;
    return out;
}

double count_regular_lower(long long n, int d, const CountingConstants& c) {
    if ((static_cast<long long>(d) * n) % 2 != 0)
        throw std::invalid_argument("count_regular_lower: dn must be even");
    if (static_cast<double>(d) > std::log(static_cast<double>(n)))
        throw std::invalid_argument("count_regular_lower: requires d <= log n");
    double half_dn = 0.5 * static_cast<double>(d) * static_cast<double>(n);
    return half_dn * (std::log(c.C1) + std::log(static_cast<double>(n)) -
                      std::log(static_cast<double>(d)));
}

double probability_ratio(long long n, int d, const CountingConstants& c) {
    double half_dn = 0.5 * static_cast<double>(d) * static_cast<double>(n);
    double three_c0 = 3.0 * static_cast<double>(c.C0);
    if (three_c0 * c.epsilon == c.C1)  // the exact corollary identity
        return half_dn * std::log(2.0 / 3.0);
    long double ratio = 2.0L * static_cast<long double>(c.C0) *
                        static_cast<long double>(c.epsilon) / static_cast<long double>(c.C1);
    return static_cast<double>(half_dn * std::log(ratio));
}

BoundReport bound_report(double n, double d, double eps, double C) {
    if (!(d > 2.0)) throw std::invalid_argument("bound_report: requires d > 2");
    if (!(n >= 3.0)) throw std::invalid_argument("bound_report: requires n >= 3");
    BoundReport out;
    out.exponent = (d - 2.0) / (2.0 * d - 2.0);
    double ell = std::log(n);
    double poly = std::pow(n, out.exponent);
    out.lower_value = eps * d * poly / std::sqrt(ell);
    out.upper_value = poly * std::exp(C * (std::sqrt(ell) * std::log(ell) / d + std::log(d)));
    return out;
}

}  // namespace tww
