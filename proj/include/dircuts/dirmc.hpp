#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dircuts/digraph.hpp"
#include "dircuts/psi.hpp"

namespace dircuts {

// Vertex-weighted directed multicut instance.  Deleting a set of non-terminal
// vertices of total weight at most `budget` must break every terminal pair.
// Weight budget+1 marks a vertex as undeletable; terminals carry no weight
// (their entries are zero and unused).
struct DirMcInstance {
    Digraph graph;
    std::vector<Arc> terminal_pairs;
    std::vector<long long> weight;
    long long budget = 0;
    // Heaviness constant used when this instance was produced by the
    // reduction; 0 when unknown (e.g. hand-made or parsed instances).
    int gadget_m = 0;

    std::vector<bool> terminal_mask() const;
    long long undeletable_weight() const { return budget + 1; }
};

// Field-level sanity: ids in range, pairs with distinct endpoints, exactly
// the non-terminals weighted with values in 1..budget+1.  Throws InputError.
void validate_dirmc(const DirMcInstance& inst);

// Sorted set of non-terminal, deletable vertices proposed for deletion.
struct Cutset {
    std::vector<int> vertices;
    bool operator==(const Cutset&) const = default;
};

long long cutset_weight(const DirMcInstance& inst, const Cutset& cut);

// True iff the cutset weighs at most the budget and deleting it leaves every
// terminal pair disconnected.  Terminal or undeletable members are input
// errors, as are unsorted/duplicate entries.
bool verify_multicut(const DirMcInstance& inst, const Cutset& cut);

struct DirMcSolveOptions {
    std::uint64_t max_nodes = 50'000'000;  // search nodes before giving up
};

// Minimum-weight multicut of weight <= budget, or nullopt when none exists.
// Deterministic: among minimum-weight solutions returns the lexicographically
// least vertex set.  Branch-and-bound: branches over the deletable vertices
// of a shortest uncut terminal path, pruned by budget and by a lower bound
// from greedily packed vertex-disjoint uncut terminal paths.  Throws
// ResourceLimitError past max_nodes.
std::optional<Cutset> solve_dirmc_exact(const DirMcInstance& inst,
                                        const DirMcSolveOptions& options = {});

// Same contract, by plain subset enumeration over the deletable vertices.
// Refuses instances with more than max_deletable deletable vertices.
std::optional<Cutset> solve_dirmc_exhaustive(const DirMcInstance& inst, int max_deletable = 24);

// Unit-weight expansion: every weight-w non-terminal becomes w twins sharing
// its arcs; a weight-<=budget solution exists in one instance iff in the
// other, with equal optimum.
struct WeightExpansion {
    DirMcInstance instance;
    std::vector<int> twin_to_original;
};
WeightExpansion expand_weights(const DirMcInstance& inst);

// ---------------------------------------------------------------------------
// Reduction from partitioned subgraph embedding.
//
// The produced instance has 8 terminals in 4 pairs, one bidirected
// "assignment" path per pattern vertex (role z), bidirected "transfer" paths
// per ordered pattern edge (roles x and y), and one acyclic grid per
// unordered pattern edge whose cheap cells are exactly the host edges.
// Vertex ids are assigned in the layout order that also serves as the
// width-2 path decomposition order.
// ---------------------------------------------------------------------------

DirMcInstance reduce_psi_to_dirmc(const PsiInstance& inst, int gadget_m = 2);

// Role map of a reduced instance, recovered from vertex labels.  Throws
// InputError when the labels do not describe a complete reduction product.
struct DirMcLayout {
    int n = 0;    // class size
    int ell = 0;  // pattern vertices
    std::vector<Arc> pattern_edges;  // (i, j), i < j
    int gadget_m = 0;                // recovered from hat weights
    int s_x = -1, t_x = -1, s_y = -1, t_y = -1, s_lt = -1, t_lt = -1, s_gt = -1, t_gt = -1;
    // plain[i] has n+1 entries (positions 0..n); hat[i] has n (positions 1..n).
    std::map<int, std::vector<int>> z_plain, z_hat;
    std::map<Arc, std::vector<int>> x_plain, x_hat, y_plain, y_hat;  // ordered pairs
    std::map<Arc, std::vector<std::vector<int>>> grid;               // (i, j) with i < j

    static DirMcLayout from_labels(const DirMcInstance& inst);
};

// The canonical solution encoding an assignment: one hat per transfer path at
// the assigned position, one hat per assignment path, one grid cell per
// pattern edge.  Its weight is exactly the budget.  h must be a valid
// assignment of `source` (otherwise an undeletable cell would be selected).
Cutset lift_hom_to_cutset(const PsiInstance& source, const Homomorphism& h,
                          const DirMcInstance& reduced);

// Reads the assignment back from a verified solution: position i's value is
// the unique selected hat on assignment path i.  Zero or two-plus selected
// hats on one path, or an extracted assignment that is not a valid embedding,
// are contract violations.
Homomorphism extract_hom_from_cutset(const DirMcInstance& reduced, const Cutset& cut,
                                     const PsiInstance& source);

// ---------------------------------------------------------------------------
// Directed path decompositions.
// ---------------------------------------------------------------------------

struct DirectedPathDecomposition {
    std::vector<std::vector<int>> bags;
};

// For every vertex the bags containing it must form one nonempty contiguous
// run, and every arc (u, v) needs bags i <= j with u in bag i and v in bag j.
struct PathDecompositionCheck {
    bool valid = false;
    int width = 0;             // max bag size, when valid
    std::string violation;     // names the offending vertex or arc otherwise
};
PathDecompositionCheck validate_path_decomposition(const Digraph& g,
                                                   const DirectedPathDecomposition& d);

// Width-2 decomposition of a reduced instance: bags over consecutive vertex
// pairs in the order sources, transfer-in paths, assignment paths, grids,
// transfer-out paths, sinks.
DirectedPathDecomposition build_pathwidth2_decomposition(const DirMcInstance& reduced);

}  // namespace dircuts
