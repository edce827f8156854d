#pragma once

#include <utility>
#include <vector>

#include "tww/factorization.hpp"

namespace tww {

/// Length-r sequence of symbols; labels produced here have pairwise distinct
/// symbols.
using SeqLabel = std::vector<int>;

/// True iff deleting one position from each sequence can yield equal
/// sequences (a shared subsequence of length r-1). Requires equal lengths;
/// for r = 1 every pair is close. O(r) two-pointer scan.
bool is_close(const SeqLabel& s, const SeqLabel& t);

struct LabelingResult {
    std::vector<SeqLabel> labels;  // indexed by vertex
    int alphabet_size = 0;         // all symbols lie in [0, alphabet_size)
    std::vector<std::pair<int, int>> padding_ranges;  // [begin,end) per padded component

    const SeqLabel& label(int v) const { return labels[v]; }
};

/// Labels every vertex with an r-symbol sequence such that adjacent vertices
/// get close labels and label symbols identify vertices within distance
/// 3r-3. Vertices on long cycles read off their forward path; short-cycle
/// and sink components fall back to component-local padding symbols
/// allocated above the vertex id range.
LabelingResult gamma_label(const FunctionalOrientation& d, int r);

}  // namespace tww
