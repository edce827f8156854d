#include "tww/sequence_labeling.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tww {

namespace {

// One-sided helper: can s with position k deleted equal t with one position
// deleted? k is the first index where s and t differ.
bool one_deletion_each(const SeqLabel& s, const SeqLabel& t, size_t k) {
    size_t r = s.size();
    // u = s minus position k agrees with t before k; find the first index p
    // where u[p] = s[p+1] differs from t[p], delete t[p], then suffixes must
    // match exactly.
    size_t p = k;
    while (p + 1 < r && s[p + 1] == t[p]) p++;
    for (size_t i = p + 1; i < r; i++)
        if (s[i] != t[i]) return false;
    return true;
}

}  // namespace

bool is_close(const SeqLabel& s, const SeqLabel& t) {
    if (s.size() != t.size())
        throw std::invalid_argument("is_close: length mismatch " + std::to_string(s.size()) +
                                    " vs " + std::to_string(t.size()));
    if (s.empty()) throw std::invalid_argument("is_close: empty sequences");
    size_t r = s.size();
    if (r == 1) return true;  // the empty subsequence is shared
    size_t k = 0;
    while (k < r && s[k] == t[k]) k++;
    if (k == r) return true;  // equal sequences
    return one_deletion_each(s, t, k) || one_deletion_each(t, s, k);
}

LabelingResult gamma_label(const FunctionalOrientation& d, int r) {
    if (r < 1) throw std::invalid_argument("gamma_label: r must be >= 1");
    int n = d.n;
    LabelingResult res;
    res.labels.assign(n, SeqLabel{});
    res.alphabet_size = n;

    // Component discovery by following out-arcs. Every walk ends on the
    // component's unique terminal: a directed cycle or a sink.
    std::vector<int> comp(n, -1), on_cycle_or_sink(n, 0), dist_to_x(n, -1);
    std::vector<int> order;  // walk stack
    int comp_count = 0;
    std::vector<int> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
    for (int start = 0; start < n; start++) {
        if (state[start] != 0) continue;
        order.clear();
        int v = start;
        while (v != -1 && state[v] == 0) {
            state[v] = 1;
            order.push_back(v);
            v = d.out[v];
        }
        int cid;
        if (v == -1) {
            // walk fell off a sink: the last pushed vertex is the sink
            cid = comp_count++;
            int sink = order.back();
            on_cycle_or_sink[sink] = 1;
            dist_to_x[sink] = 0;
        } else if (state[v] == 1) {
            // closed a new cycle within this walk
            cid = comp_count++;
            for (size_t i = order.size(); i-- > 0;) {
                on_cycle_or_sink[order[i]] = 1;
                dist_to_x[order[i]] = 0;
                if (order[i] == v) break;
            }
        } else {
            cid = comp[v];  // joined a finished component
        }
        for (size_t i = order.size(); i-- > 0;) {
            int u = order[i];
            state[u] = 2;
            comp[u] = cid;
            if (dist_to_x[u] == -1) {
                int next = i + 1 < order.size() ? order[i + 1] : v;
                assert(next != -1 && dist_to_x[next] >= 0);
                dist_to_x[u] = dist_to_x[next] + 1;
            }
        }
    }

    // cycle/terminal size per component
    std::vector<int> x_size(comp_count, 0);
    for (int v = 0; v < n; v++)
        if (on_cycle_or_sink[v]) x_size[comp[v]]++;

    std::vector<int> padding_base(comp_count, -1);
    for (int v = 0; v < n; v++) {
        SeqLabel& lab = res.labels[v];
        lab.reserve(r);
        if (x_size[comp[v]] >= r) {
            // the unique forward path of r vertices; distinct because the
            // tail is simple and the cycle has at least r vertices
            int u = v;
            for (int i = 0; i < r; i++) {
                lab.push_back(u);
                u = d.out[u];
            }
        } else {
            // forward path until the terminal set, capped at r, then padding
            int k = std::min(dist_to_x[v], r);
            int u = v;
            for (int i = 0; i < k; i++) {
                lab.push_back(u);
                u = d.out[u];
            }
            int c = comp[v];
            if (padding_base[c] == -1) {
                padding_base[c] = res.alphabet_size;
                res.alphabet_size += r;
                res.padding_ranges.emplace_back(padding_base[c], padding_base[c] + r);
            }
            for (int i = 0; i < r - k; i++) lab.push_back(padding_base[c] + i);
        }
        assert(static_cast<int>(lab.size()) == r);
    }
    return res;
}

}  // namespace tww
