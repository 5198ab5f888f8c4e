#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dircuts/mixed_graph.hpp"
#include "dircuts/psi.hpp"

namespace dircuts {

// Direction assigned to one undirected edge: Forward turns edge (u, v) into
// the arc u -> v, Backward into v -> u.
enum class EdgeDir { Forward, Backward };

// One direction per undirected edge, indexed like MixedGraph's edges.
struct Orientation {
    std::vector<EdgeDir> dir;
    bool operator==(const Orientation&) const = default;
};

// Orientation instance: orient every undirected edge so that each terminal
// pair (s, t) is connected by a directed s -> t path.
struct StorInstance {
    MixedGraph graph;
    std::vector<Arc> terminal_pairs;
};

// Terminal ids in range and pairs with distinct endpoints (repeated pairs are
// allowed; they state the same requirement twice).  Throws InputError.
void validate_stor(const StorInstance& inst);

// True iff the fully oriented graph connects every terminal pair.
bool verify_orientation(const StorInstance& inst, const Orientation& o);

struct StorSolveOptions {
    int max_edges = 24;  // refuse instances with more undirected edges
};

// First satisfying orientation in lexicographic (Forward < Backward) order,
// or nullopt.  Depth-first search over the edges in index order, pruning a
// partial assignment as soon as some terminal pair is disconnected even with
// all unassigned edges traversable both ways.  Throws ResourceLimitError when
// the instance has more than max_edges undirected edges.
std::optional<Orientation> solve_stor_exact(const StorInstance& inst,
                                            const StorSolveOptions& options = {});

// ---------------------------------------------------------------------------
// Reduction from partitioned subgraph embedding.
//
// Per pattern vertex i an undirected "choice" path C^i and "check" path D^i;
// per ordered pattern edge (i, j) undirected transfer paths X^{i,j} and
// Y^{i,j}; per unordered pattern edge one acyclic grid whose cells are intact
// exactly for host edges and are otherwise split into a SW/NE half pair
// joined by an undirected edge.  2*l + 10*k terminal pairs force every
// satisfying orientation to encode an assignment.
// ---------------------------------------------------------------------------

StorInstance reduce_psi_to_stor(const PsiInstance& source);

// Role map of a reduced instance, recovered from vertex labels.  Throws
// InputError when the labels do not describe a complete reduction product.
struct StorLayout {
    int n = 0;    // class size
    int ell = 0;  // pattern vertices
    std::vector<Arc> pattern_edges;  // (i, j), i < j

    // Path vertex ids by position 1..n (at index a-1).
    std::map<int, std::vector<int>> c, d;
    std::map<Arc, std::vector<int>> x, y;  // ordered pairs
    // Path edge indices by position 1..n-1 (edge b joins positions b, b+1).
    std::map<int, std::vector<int>> c_edge, d_edge;
    std::map<Arc, std::vector<int>> x_edge, y_edge;

    // An intact cell is one vertex (sw == ne); a split cell is a SW/NE half
    // pair joined by undirected edge `edge`.
    struct Cell {
        int sw = -1;
        int ne = -1;
        int edge = -1;
        bool split() const { return edge >= 0; }
    };
    std::map<Arc, std::vector<std::vector<Cell>>> grid;  // (i, j) with i < j

    static StorLayout from_labels(const StorInstance& inst);
};

// The canonical satisfying orientation for an assignment: every choice and
// transfer-in path oriented towards its assigned position, every check and
// transfer-out path away from it; split cells on the assigned column flow
// NE -> SW, all other split cells SW -> NE.  h must be a valid assignment of
// `source`.
Orientation lift_hom_to_orientation(const PsiInstance& source, const Homomorphism& h,
                                    const StorInstance& reduced);

// Reads the assignment back from a satisfying orientation: choice path i must
// be oriented towards a unique position (all forward edges before all
// backward ones), which is phi(i).  Any other shape, or an extracted
// assignment that is not a valid embedding, is a contract violation.
Homomorphism extract_hom_from_orientation(const StorInstance& reduced, const Orientation& o,
                                          const PsiInstance& source);

}  // namespace dircuts
