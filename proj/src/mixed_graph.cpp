#include "dircuts/mixed_graph.hpp"

#include "dircuts/errors.hpp"

namespace dircuts {

void MixedGraph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= vertex_count())
        throw InputError(std::string(what) + ": vertex id " + std::to_string(v) +
                         " out of range (vertex count " + std::to_string(vertex_count()) + ")");
}

int MixedGraph::add_vertex(std::string label) {
    labels_.push_back(std::move(label));
    return vertex_count() - 1;
}

bool MixedGraph::connects(int u, int v) const {
    for (const Arc& a : arcs_)
        if ((a.first == u && a.second == v) || (a.first == v && a.second == u)) return true;
    for (const UndirectedEdge& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    return false;
}

void MixedGraph::add_arc(int u, int v) {
    check_vertex(u, "add_arc");
    check_vertex(v, "add_arc");
    if (u == v) throw InputError("add_arc: self-loop at vertex " + std::to_string(u));
    if (connects(u, v))
        throw InputError("add_arc: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " are already connected");
    arcs_.emplace_back(u, v);
}

int MixedGraph::add_edge(int u, int v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v) throw InputError("add_edge: self-loop at vertex " + std::to_string(u));
    if (connects(u, v))
        throw InputError("add_edge: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " are already connected");
    edges_.push_back({u, v});
    return edge_count() - 1;
}

void MixedGraph::set_label(int v, std::string label) {
    check_vertex(v, "set_label");
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

}  // namespace dircuts
