#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dircuts/digraph.hpp"

namespace dircuts {

// Partitioned subgraph-embedding instance.  A pattern graph on vertices
// 1..pattern_vertex_count must be mapped into a host graph whose vertices are
// partitioned into one class per pattern vertex; pattern vertex i may only go
// to a member of classes[i-1].  In a normalized instance every class has
// exactly class_size members and no pattern vertex is isolated.
//
// Host vertices are dense ids 0..host_vertex_count()-1 and the classes
// partition them.  host_edges are undirected, stored as (min, max) pairs.
struct PsiInstance {
    int class_size = 0;                      // n
    int pattern_vertex_count = 0;            // number of pattern vertices
    std::vector<Arc> pattern_edges;          // 1-based (i, j) with i < j, sorted, unique
    std::vector<std::vector<int>> classes;   // classes[i-1] = host ids for pattern vertex i
    std::vector<Arc> host_edges;             // (u, v) with u < v, sorted, unique

    int host_vertex_count() const;
    bool has_host_edge(int u, int v) const;
    int pattern_edge_count() const { return static_cast<int>(pattern_edges.size()); }
    // Host vertex for pattern vertex i (1-based) at position a (1-based).
    int member(int i, int a) const { return classes[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(a - 1)]; }
    int pattern_degree(int i) const;
};

// Assignment of one class position (1-based) per pattern vertex.
struct Homomorphism {
    std::vector<int> image;  // image[i-1] = chosen position for pattern vertex i
    bool operator==(const Homomorphism&) const = default;
};

// Structural sanity of the fields above (ids dense, classes a partition,
// pattern edges well-formed).  Throws InputError on violation.
void validate_psi(const PsiInstance& inst);

// True when the instance needs no normalization: all classes have exactly
// class_size members and no pattern vertex is isolated.
bool is_normalized(const PsiInstance& inst);

// Deletes isolated pattern vertices together with their classes, then pads
// every class to equal size with fresh isolated host vertices.  Returns
// nullopt when some surviving class is empty (trivially unsatisfiable).
std::optional<PsiInstance> normalize_psi(const PsiInstance& raw);

// Checks that h maps every pattern edge to a host edge.  The instance must be
// normalized; positions out of range are input errors.
bool is_partitioned_homomorphism(const PsiInstance& inst, const Homomorphism& h);

// Exhaustive scan over all class_size^pattern_vertex_count assignments in
// lexicographic order; returns the first witness.
std::optional<Homomorphism> solve_psi(const PsiInstance& inst);

// Generates a normalized yes-instance: plants a random assignment, inserts
// the host edges it needs, then sprinkles noise edges between classes.  The
// pattern must have no isolated vertex among 1..max listed vertex.
PsiInstance gen_psi_planted(int n, std::span<const Arc> pattern_edges, std::uint64_t seed,
                            double noise = 0.25);

}  // namespace dircuts
