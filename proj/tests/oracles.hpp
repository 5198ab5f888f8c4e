// Brute-force reference implementations used by the tests.  Each one works
// straight from the relevant definition with plain exhaustive enumeration, so
// that agreement with the tuned library code is meaningful evidence.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dircuts/digraph.hpp"
#include "dircuts/dirmc.hpp"
#include "dircuts/psi.hpp"
#include "dircuts/rng.hpp"
#include "dircuts/stor.hpp"

namespace oracles {

using dircuts::Arc;
using dircuts::ArcSet;
using dircuts::Digraph;

// Plain recursive backtracking over pattern vertices; no odometer, no
// ordering tricks.  Returns any witness.
std::optional<dircuts::Homomorphism> solve_psi(const dircuts::PsiInstance& inst);

// Counts all class-respecting assignments that map pattern edges to host
// edges.
long long count_psi_homs(const dircuts::PsiInstance& inst);

// Minimum total weight of a deletable-vertex set separating every terminal
// pair, by trying all subsets.  Ignores the budget; nullopt when no subset
// works at all.  Throws when there are more than `max_deletable` candidates.
std::optional<long long> min_multicut_weight(const dircuts::DirMcInstance& inst,
                                             int max_deletable = 24);

// True when some orientation of the undirected edges connects every pair;
// tries all 2^m orientations with no pruning.
bool stor_satisfiable(const dircuts::StorInstance& inst, int max_edges = 20);

// All inclusion-minimal s-t cuts with at most k arcs (parallel copies all
// counted), by trying every set of arc pairs.  Sorted output.
std::vector<ArcSet> minimal_cuts(const Digraph& g, int s, int t, int k);

// Straight from the definition: minimal cuts C (<= k) such that no other
// cut of size <= |C| keeps at least the same source-reachable set.
std::vector<ArcSet> important_separators(const Digraph& g, int s, int t, int k);

// Maximum size of a path system: paths start at distinct members of X and
// end at distinct members of Y, every vertex outside X and Y carries at most
// one path, members of X and Y may be shared freely, and a vertex in both X
// and Y yields a zero-length path.  Computed by backtracking over explicitly
// enumerated simple paths.  `forbidden` vertices may not be used at all.
int max_path_system(const Digraph& g, const std::vector<int>& sources,
                    const std::vector<int>& sinks, const std::vector<int>& forbidden = {});

// Erdos-style random digraph; parallel arcs added with `parallel_prob` on top
// of each chosen pair.
Digraph random_digraph(int n, double arc_prob, dircuts::SplitMix64& rng,
                       double parallel_prob = 0.0);

// Uniformly random normalized instance: fixed pattern, every inter-class
// host edge present with probability one half.
dircuts::PsiInstance random_psi(int n, const std::vector<Arc>& pattern_edges,
                                dircuts::SplitMix64& rng);

// Instance with host edges given as a bitmask over the pattern-edge class
// pairs in fixed (edge, a, b) order; mask bit count is k * n * n.
dircuts::PsiInstance psi_from_mask(int n, const std::vector<Arc>& pattern_edges,
                                   std::uint64_t mask);

}  // namespace oracles
