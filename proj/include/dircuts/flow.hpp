#pragma once

#include <optional>
#include <span>

#include "dircuts/digraph.hpp"

namespace dircuts {

struct MinArcCut {
    // The cut arcs, sorted; with parallel arcs a pair repeats once per copy.
    ArcSet arcs;
    // Vertices reachable from s in the residual graph of a maximum flow: the
    // minimal source side of a minimum cut.
    std::vector<bool> source_side;
};

// Minimum s-t arc cut if its size is <= cap, nullopt if every cut is larger.
// Errors if s == t.
std::optional<MinArcCut> min_arc_cut(const Digraph& g, int s, int t, int cap);

// Minimum arc cut separating the whole source set from t, with the *maximal*
// source side among minimum cuts (the cut closest to t).  If the minimum cut
// is larger than cap, returns value = cap + 1 and empty side/cut fields.
// Vertices of `sources` must not include t.
struct SourceSetCut {
    int value = 0;
    std::vector<bool> max_source_side;
    ArcSet cut;  // arcs leaving max_source_side
};
SourceSetCut min_arc_cut_from_set(const Digraph& g, std::span<const int> sources, int t, int cap);

// Maximum number of X -> Y paths computed by the vertex-splitting flow
// transform: every vertex outside X and Y gets capacity one, members of X and
// Y are uncapacitated, each member of X starts at most one path and each
// member of Y ends at most one.  `forbidden` vertices are removed first and
// must be disjoint from X and Y; X and Y must not repeat vertices.
int vertex_disjoint_paths(const Digraph& g, std::span<const int> from, std::span<const int> to,
                          std::span<const int> forbidden = {});

}  // namespace dircuts
