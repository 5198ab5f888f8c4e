#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dircuts {

// An arc (u, v) goes from u to v.
using Arc = std::pair<int, int>;
// Arc sets are kept sorted; when a graph has parallel arcs a pair may repeat.
using ArcSet = std::vector<Arc>;

// Directed graph over dense vertex ids 0..n-1 with an optional text label per
// vertex.  Self-loops are rejected.  Parallel arcs are representable (some
// hand-made inputs use them) but the gadget constructions only emit simple
// graphs.  All operations on Digraph are pure: they never mutate their input.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int n) : labels_(n), out_(n), in_(n) {}

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    int add_vertex(std::string label = {});
    void add_arc(int u, int v);
    // Adds (u, v) unless already present; returns true if added.
    bool add_arc_once(int u, int v);
    bool has_arc(int u, int v) const;

    const std::vector<Arc>& arcs() const { return arcs_; }
    Arc arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }
    // Arc ids leaving / entering a vertex, in insertion order.
    const std::vector<int>& out_arc_ids(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in_arc_ids(int v) const { return in_[static_cast<std::size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_label(int v, std::string label);

    bool is_simple() const;  // no parallel arcs
    void check_vertex(int v, const char* what) const;

  private:
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> out_;  // arc ids
    std::vector<std::vector<int>> in_;   // arc ids
};

// Vertices reachable from `sources` (which are themselves reachable), as a
// sorted id list.
std::vector<int> reachable(const Digraph& g, std::span<const int> sources);

// Mask form of the above, with optional removals: vertices whose mask bit is
// set are treated as deleted (they are never visited, even as sources), and
// arcs whose id bit is set are treated as deleted.  Either mask may be null.
std::vector<bool> reach_mask(const Digraph& g, std::span<const int> sources,
                             const std::vector<bool>* removed_vertices = nullptr,
                             const std::vector<bool>* removed_arcs = nullptr);

// All arcs reversed (arc ids map one-to-one), labels preserved.
Digraph reverse_graph(const Digraph& g);

// Removes v, connecting every in-neighbor u to every out-neighbor w (u != w),
// deduplicating arcs.  Vertices with id > v shift down by one.  Refuses to
// bypass a vertex listed in `protected_vertices`.
Digraph bypass_vertex(const Digraph& g, int v, std::span<const int> protected_vertices = {});

// Arc-id mask covering every copy of every pair in `set`.
std::vector<bool> arc_id_mask(const Digraph& g, const ArcSet& set);

// Sorts and deduplicates.
ArcSet as_arc_set(ArcSet arcs);

}  // namespace dircuts
