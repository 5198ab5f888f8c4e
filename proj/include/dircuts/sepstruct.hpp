#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dircuts/bigint.hpp"
#include "dircuts/digraph.hpp"

namespace dircuts {

// A digraph with a designated source, sink, and cut-size cap.  Everything in
// this module that talks about "cuts" means s-t arc cuts of size at most k.
//
// Arc sets are multisets of (u, v) pairs: when the graph has parallel copies
// of an arc, a cut that severs the connection lists every copy.  Functions
// taking a caller-supplied cut canonicalize it to full multiplicity first.
struct CutContext {
    Digraph graph;
    int s = 0;
    int t = 0;
    int k = 0;
};

// Errors unless s != t, both are vertices of the graph, and k >= 0.
void validate_cut_context(const CutContext& ctx);
CutContext make_cut_context(Digraph graph, int s, int t, int k);

// Caps for the exhaustive enumerations; exceeding one raises a resource-limit
// error rather than silently running forever.
struct SepLimits {
    // enum_minimal_cuts enumerates source sides over the non-s,t vertices.
    int max_free_vertices = 18;
    // is_important_separator enumerates arc subsets up to the cut size.
    std::uint64_t max_subsets = 20'000'000;
};

// All inclusion-minimal s-t arc cuts of size <= k, each exactly once, in
// sorted order.  A cut is the full arc boundary of a "source side" vertex set
// containing s but not t; it is inclusion-minimal when every cut arc (u, v)
// still has s -> u and v -> t paths after the cut is removed.  When s cannot
// reach t at all, the unique minimal cut is the empty set.
std::vector<ArcSet> enum_minimal_cuts(const CutContext& ctx, const SepLimits& limits = {});

// Literal definition check, by exhaustive search over arc subsets: C is an
// important separator when it is an inclusion-minimal s-t cut and no other
// cut C' != C with |C'| <= |C| keeps at least the same set of vertices
// reachable from s.  Two formulations of "no other cut dominates" (any-cut
// with non-strict reach containment vs. strict containment) are both
// evaluated and cross-checked; they provably agree on minimal cuts, so a
// divergence is reported as a contract violation.
// Preconditions: every listed arc exists; |C| <= k after canonicalization.
bool is_important_separator(const CutContext& ctx, const ArcSet& C, const SepLimits& limits = {});

// Complete duplicate-free enumeration of the important separators of size
// <= k, sorted.  Implemented by recursive branching: compute the minimum cut
// with inclusion-maximal source side, then branch on its first arc (commit it
// to the separator with reduced budget, or absorb its head into the source
// set); candidates are then deduplicated and filtered down to the important
// ones.  The result count is asserted to be at most 4^k.
std::vector<ArcSet> enum_important_separators(const CutContext& ctx);

// Pushes an s-t cut (size <= k) to an important separator that is no larger
// and keeps at least the same source-reachable set.  Deterministic: repeats
// "replace by the minimum cut with maximal source side for the current
// reachable region" until a fixpoint; idempotent on important separators.
// Errors if C is not a cut or exceeds k.
ArcSet push_to_important(const CutContext& ctx, const ArcSet& C);

// Union of all inclusion-minimal s-t cuts of size <= k, as a sorted
// duplicate-free pair list.  Empty when the minimum cut exceeds k.
ArcSet participating_arcs(const CutContext& ctx, const SepLimits& limits = {});

// Result of repeatedly bypassing vertices that sit on no minimal cut: the
// reduced graph, where s and t moved, and for each surviving vertex the id it
// had in the input graph.
struct CoreResult {
    Digraph graph;
    int s = 0;
    int t = 0;
    std::vector<int> original_vertex;
};

// Repeatedly removes (by bypassing) every non-s,t vertex that is not incident
// to any arc of participating_arcs, recomputing after each pass until no such
// vertex remains.  In the result every non-s,t vertex touches a minimal cut
// of size <= k.  Idempotent.
CoreResult cut_minimal_core(const CutContext& ctx, const SepLimits& limits = {});

struct WellLinkedResult {
    bool well_linked = false;
    // When not well linked: the first subset pair (in deterministic order)
    // with fewer than |X| vertex-disjoint X -> Y paths in the graph minus the
    // rest of T.
    std::vector<int> violating_x;
    std::vector<int> violating_y;
};

// T is well linked when for every pair of equal-size subsets X, Y of T there
// are |X| vertex-disjoint X -> Y paths in the graph with T \ (X u Y) removed.
// Subset pairs are scanned in ascending size, then ascending bitmask order
// over sorted T, X outer, Y inner; the first failing pair is reported.
// |T| above max_terminals raises a resource-limit error.
WellLinkedResult is_well_linked(const Digraph& g, std::vector<int> T, int max_terminals = 5);

// A family of sets whose pairwise intersections all equal the same core.
struct Sunflower {
    std::vector<int> core;
    std::vector<std::vector<int>> petals;  // full sets, each containing core
};

// Searches for a sunflower with more than `target` petals by the greedy
// recursion: collect a maximal pairwise-disjoint subfamily; if it is large
// enough it is the sunflower (empty core), otherwise recurse on the sets
// containing the most popular element.  Guaranteed to succeed whenever the
// family holds more than d! * target^d distinct sets of size d; may also
// succeed below that bound.  Duplicate sets in the family are ignored.
// Errors when sets repeat an element or have unequal sizes.
std::optional<Sunflower> find_sunflower(std::vector<std::vector<int>> family, int target);

// Outcome of checking a family of cuts C_1..C_r and targets v_1..v_r against
// the requirement "s reaches v_j in (g - C_i) exactly when i = j", plus the
// count bound r <= (k+1) * 4^(k+1).
struct AntiIsolationReport {
    int r = 0;
    // premise[i][j] = does s reach v_j once C_i is removed?
    std::vector<std::vector<bool>> premise;
    bool premise_ok = false;
    std::vector<std::pair<int, int>> premise_failures;  // (i, j) with premise[i][j] != (i == j)
    BigUint bound;   // (k+1) * 4^(k+1)
    bool within_bound = false;
    BigUint margin;  // bound - r when within_bound, else 0
};

// Verifies the premise matrix and the bound.  A family that satisfies the
// premise but exceeds the bound is mathematically impossible, so that case
// raises a contract violation instead of returning.  Errors when the lists
// have different lengths, some |C_i| exceeds k, or an arc/vertex is invalid.
AntiIsolationReport check_anti_isolation(const Digraph& g, int s, const std::vector<int>& targets,
                                         const std::vector<ArcSet>& cuts, int k);

// First minimal cut C (in enum_minimal_cuts order) splitting F: more than k
// arcs (u, v) of F \ C keep an s -> u path in g - C, and more than k keep a
// v -> t path.  Errors unless every arc of F participates in some minimal cut
// of size <= k.  Returns nothing when no enumerated cut qualifies.
std::optional<ArcSet> find_splitting_cut(const CutContext& ctx, const ArcSet& F,
                                         const SepLimits& limits = {});

// The module's two explicit combinatorial bounds:
//   g = (k+1) * 4^(k+1)           (anti-isolation family size)
//   h = 2 * g * sum_{d=1..2k} d! * g^d   (arc count forcing a splitting cut)
struct BoundValues {
    BigUint g;
    BigUint h;
};
BoundValues bounds(int k);

// Search harness over all orientations of the rows x cols grid graph (unit
// edges between horizontal and vertical neighbours), with s the top-left and
// t the bottom-right corner: which orientations are already k-cut-minimal,
// i.e. leave no vertex for cut_minimal_core to bypass?
struct GridOrientationReport {
    int rows = 0;
    int cols = 0;
    int k = 0;
    std::uint64_t orientations_tested = 0;
    // Edge-direction bitcodes of the k-cut-minimal orientations found, in
    // ascending order, truncated to the caller's cap.
    std::vector<std::uint64_t> cut_minimal_codes;
    std::uint64_t cut_minimal_count = 0;
    bool truncated = false;
};
GridOrientationReport search_grid_orientations(int rows, int cols, int k,
                                               std::size_t max_report = 64);

}  // namespace dircuts
