#include "tww/pi_space.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace tww {

void PiParams::validate() const {
    if (b < 1 || a < b) throw std::invalid_argument("pi: need a >= b >= 1");
    if (q < 2) throw std::invalid_argument("pi: need q >= 2");
    if (static_cast<int>(r.size()) != a)
        throw std::invalid_argument("pi: r must list one length per component");
    for (int ri : r)
        if (ri < 1) throw std::invalid_argument("pi: component lengths must be >= 1");
}

long long PiParams::total_length() const {
    long long s = 0;
    for (int ri : r) s += ri;
    return s;
}

int PiParams::r_max() const {
    int m = 1;
    for (int ri : r) m = std::max(m, ri);
    return m;
}

BigInt PiParams::vertex_count() const {
    return boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(total_length()));
}

namespace {

void check_shape(const PiVertex& u, const PiParams& p, const char* who) {
    if (static_cast<int>(u.comps.size()) != p.a)
        throw std::invalid_argument(std::string(who) + ": component count mismatch");
    for (int i = 0; i < p.a; i++) {
        if (static_cast<int>(u.comps[i].size()) != p.r[i])
            throw std::invalid_argument(std::string(who) + ": component " + std::to_string(i) +
                                        " has wrong length");
        for (int s : u.comps[i])
            if (s < 0 || s >= p.q)
                throw std::invalid_argument(std::string(who) + ": symbol out of [q]");
    }
}

}  // namespace

bool pi_adjacent(const PiVertex& u, const PiVertex& v, const PiParams& p) {
    p.validate();
    check_shape(u, p, "pi_adjacent");
    check_shape(v, p, "pi_adjacent");
    if (u == v) return false;
    int hits = 0;
    for (int i = 0; i < p.a; i++) {
        if (u.comps[i] == v.comps[i] || is_close(u.comps[i], v.comps[i])) hits++;
        if (hits >= p.b) return true;
        if (hits + (p.a - 1 - i) < p.b) return false;
    }
    return false;
}

BigInt pi_degree_bound(const PiParams& p, int r_max) {
    p.validate();
    for (int ri : p.r)
        if (ri > r_max) throw std::invalid_argument("pi_degree_bound: some r_i exceeds r_max");
    using boost::multiprecision::pow;
    long long exp_q = static_cast<long long>(p.a) * r_max -
                      static_cast<long long>(p.b) * (r_max - 1);
    assert(exp_q > 0);
    return pow(BigInt(r_max), 2 * static_cast<unsigned>(p.b)) *
           pow(BigInt(p.a), static_cast<unsigned>(p.b)) *
           pow(BigInt(p.q), static_cast<unsigned>(exp_q));
}

PiVertex erase_last(const PiVertex& u, int comp) {
    if (comp < 0 || comp >= static_cast<int>(u.comps.size()))
        throw std::invalid_argument("erase_last: component index out of range");
    if (u.comps[comp].size() < 2)
        throw std::invalid_argument("erase_last: component already has length 1");
    PiVertex v = u;
    v.comps[comp].pop_back();
    return v;
}

std::vector<PiVertex> pi_vertices(const PiParams& p, long long budget) {
    p.validate();
    if (p.vertex_count() > budget)
        throw std::invalid_argument("pi_vertices: q^(sum r_i) exceeds budget " +
                                    std::to_string(budget));
    long long total = static_cast<long long>(p.vertex_count());
    std::vector<PiVertex> verts;
    verts.reserve(total);
    PiVertex cur;
    cur.comps.resize(p.a);
    for (int i = 0; i < p.a; i++) cur.comps[i].assign(p.r[i], 0);
    while (true) {
        verts.push_back(cur);
        // odometer increment, last symbol of last component is fastest
        int i = p.a - 1, j = p.r[p.a - 1] - 1;
        while (i >= 0) {
            if (++cur.comps[i][j] < p.q) break;
            cur.comps[i][j] = 0;
            if (--j < 0) {
                if (--i >= 0) j = p.r[i] - 1;
            }
        }
        if (i < 0) break;
    }
    assert(static_cast<long long>(verts.size()) == total);
    assert(std::is_sorted(verts.begin(), verts.end()));
    return verts;
}

Graph pi_graph(const PiParams& p, long long budget) {
    auto verts = pi_vertices(p, budget);
    int n = static_cast<int>(verts.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (pi_adjacent(verts[i], verts[j], p)) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

ContractionSequence pi_trajectory_contract(const std::vector<PiVertex>& image,
                                           const PiParams& p) {
    p.validate();
    for (const auto& u : image) check_shape(u, p, "pi_trajectory_contract");
    for (size_t i = 1; i < image.size(); i++)
        for (size_t j = 0; j < i; j++)
            if (image[i] == image[j])
                throw std::invalid_argument("pi_trajectory_contract: duplicate image vertex at " +
                                            std::to_string(i));

    ContractionSequence seq;
    seq.initial_n = static_cast<int>(image.size());
    if (image.empty()) return seq;

    // live member: (current reduced form, original form for in-group ordering,
    // current live id)
    struct Member {
        PiVertex form;
        PiVertex original;
        int id;
    };
    std::vector<Member> live;
    live.reserve(image.size());
    for (int i = 0; i < static_cast<int>(image.size()); i++)
        live.push_back({image[i], image[i], i});

    int next_id = seq.initial_n;
    auto merge_group = [&](std::vector<Member*>& group, const PiVertex& new_form) {
        // ascending lexicographic order of original forms keeps the schedule
        // aligned with the full-space schedule
        std::sort(group.begin(), group.end(),
                  [](const Member* x, const Member* y) { return x->original < y->original; });
        int cur = group[0]->id;
        for (size_t k = 1; k < group.size(); k++) {
            seq.merges.emplace_back(cur, group[k]->id);
            cur = next_id++;
        }
        group[0]->form = new_form;
        group[0]->id = cur;
    };

    for (int c = 0; c < p.a; c++) {
        for (int col = p.r[c]; col >= 2; col--) {
            // group members by erased form; map iteration is lex order
            std::map<PiVertex, std::vector<Member*>> groups;
            for (auto& mem : live) groups[erase_last(mem.form, c)].push_back(&mem);
            std::vector<Member> survivors;
            survivors.reserve(groups.size());
            for (auto& [form, group] : groups) {
                merge_group(group, form);
                survivors.push_back(*group[0]);
            }
            live = std::move(survivors);
        }
    }
    // base case: all components reduced to single symbols; fold the
    // survivors one by one in lexicographic order
    std::sort(live.begin(), live.end(),
              [](const Member& x, const Member& y) { return x.form < y.form; });
    for (size_t k = 1; k < live.size(); k++) {
        seq.merges.emplace_back(live[0].id, live[k].id);
        live[0].id = next_id++;
    }
    assert(seq.complete());
    return seq;
}

ContractionSequence pi_contract_full(const PiParams& p, long long budget) {
    return pi_trajectory_contract(pi_vertices(p, budget), p);
}

}  // namespace tww
