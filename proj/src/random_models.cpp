#include "tww/random_models.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tww {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rng: zero bound");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Seed mix_seed(Seed seed, std::uint64_t stream) {
    Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    return r.next();
}

namespace {

std::uint64_t pair_count(int n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

// Inverse of the row-major upper-triangle linearization: index t over pairs
// (0,1),(0,2),...,(0,n-1),(1,2),... maps back to (i,j).
Edge unrank_pair(std::uint64_t t, int n) {
    std::uint64_t nn = static_cast<std::uint64_t>(n);
    // i is the largest row whose block starts at or before t
    std::uint64_t lo = 0, hi = nn - 1;
    auto row_start = [&](std::uint64_t i) {
        return i * nn - i * (i + 1) / 2;  // sum of row lengths (n-1-k) for k<i
    };
    while (lo < hi) {
        std::uint64_t mid = (lo + hi + 1) / 2;
        if (row_start(mid) <= t)
            lo = mid;
        else
            hi = mid - 1;
    }
    std::uint64_t i = lo;
    std::uint64_t j = i + 1 + (t - row_start(i));
    return {static_cast<int>(i), static_cast<int>(j)};
}

}  // namespace

Graph gen_gnp(int n, double p, Seed seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_gnp: p outside [0,1]");
    if (n < 0) throw std::invalid_argument("gen_gnp: negative n");
    std::vector<Edge> edges;
    std::uint64_t total = pair_count(n);
    if (p >= 1.0) {
        edges.reserve(total);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++) edges.emplace_back(u, v);
        return Graph(n, std::move(edges));
    }
    if (p <= 0.0 || total == 0) return Graph(n, {});
    // geometric skipping over linearized pair indices
    Rng rng(seed);
    double log1mp = std::log1p(-p);
    std::uint64_t t = 0;
    while (true) {
        double u = rng.unit();
        double skip = std::floor(std::log1p(-u) / log1mp);
        if (skip >= static_cast<double>(total)) break;
        t += static_cast<std::uint64_t>(skip);
        if (t >= total) break;
        edges.push_back(unrank_pair(t, n));
        t++;
        if (t >= total) break;
    }
    return Graph(n, std::move(edges));
}

Graph gen_gnm(int n, long long m, Seed seed) {
    if (n < 0 || m < 0) throw std::invalid_argument("gen_gnm: negative parameter");
    std::uint64_t total = pair_count(n);
    std::uint64_t mm = static_cast<std::uint64_t>(m);
    if (mm > total)
        throw std::invalid_argument("gen_gnm: m exceeds C(n,2) = " + std::to_string(total));
    Rng rng(seed);
    std::vector<std::uint64_t> picked;
    picked.reserve(mm);
    if (2 * mm <= total) {
        // hash-set rejection; at most half the index space is occupied
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(mm * 2);
        while (picked.size() < mm) {
            std::uint64_t t = rng.below(total);
            if (seen.insert(t).second) picked.push_back(t);
        }
    } else if (total <= (1ULL << 24)) {
        // dense request: partial Fisher-Yates over the materialized index space
        std::vector<std::uint64_t> all(total);
        for (std::uint64_t i = 0; i < total; i++) all[i] = i;
        for (std::uint64_t i = 0; i < mm; i++) {
            std::uint64_t j = i + rng.below(total - i);
            std::swap(all[i], all[j]);
            picked.push_back(all[i]);
        }
    } else {
        throw std::invalid_argument("gen_gnm: dense request on huge pair space unsupported");
    }
    std::vector<Edge> edges;
    edges.reserve(mm);
    for (std::uint64_t t : picked) edges.push_back(unrank_pair(t, n));
    return Graph(n, std::move(edges));
}

Graph gen_regular(int n, int d, Seed seed, long long* retries) {
    if (n < 0 || d < 0) throw std::invalid_argument("gen_regular: negative parameter");
    if (d >= n && !(d == 0 && n <= 1))
        throw std::invalid_argument("gen_regular: d must be < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("gen_regular: d*n odd, no d-regular graph exists");
    if (d > 7)
        throw std::invalid_argument(
            "gen_regular: d > 7 makes uniform pairing-model rejection impractical; refusing "
            "rather than sampling with bias");
    if (retries) *retries = 0;
    if (d == 0) return Graph(n, {});

    Rng rng(seed);
    std::vector<int> stubs(static_cast<size_t>(n) * d);
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * d / 2);
    while (true) {
        for (int v = 0; v < n; v++)
            for (int k = 0; k < d; k++) stubs[static_cast<size_t>(v) * d + k] = v;
        // uniform perfect matching: shuffle, then pair consecutive stubs
        for (size_t i = stubs.size() - 1; i > 0; i--) {
            size_t j = rng.below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        edges.clear();
        bool ok = true;
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(stubs.size());
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            std::uint64_t key = static_cast<std::uint64_t>(std::min(u, v)) << 32 |
                                static_cast<std::uint64_t>(std::max(u, v));
            if (!seen.insert(key).second) {
                ok = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (ok) break;
        if (retries) (*retries)++;
    }
    return Graph(n, std::move(edges));
}

}  // namespace tww
