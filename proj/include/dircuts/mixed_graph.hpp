#pragma once

#include <string>
#include <vector>

#include "dircuts/digraph.hpp"

namespace dircuts {

// Edge stored as (u, v); orienting it FORWARD yields the arc u -> v.
struct UndirectedEdge {
    int u = 0;
    int v = 0;
    bool operator==(const UndirectedEdge&) const = default;
};

// Graph with both arcs and undirected edges over dense vertex ids.  Edge
// indices are stable: they are assigned in insertion order and orientation
// vectors refer to them positionally.  No pair of vertices carries both an
// arc (in either direction) and an undirected edge.
class MixedGraph {
  public:
    MixedGraph() = default;
    explicit MixedGraph(int n) : labels_(n) {}

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    int add_vertex(std::string label = {});
    void add_arc(int u, int v);
    int add_edge(int u, int v);  // returns the edge index

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<UndirectedEdge>& edges() const { return edges_; }
    const UndirectedEdge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
    void set_label(int v, std::string label);

    void check_vertex(int v, const char* what) const;

  private:
    std::vector<Arc> arcs_;
    std::vector<UndirectedEdge> edges_;
    std::vector<std::string> labels_;
    bool connects(int u, int v) const;
};

}  // namespace dircuts
