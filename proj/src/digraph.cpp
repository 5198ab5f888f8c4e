#include "dircuts/digraph.hpp"

#include <algorithm>
#include <queue>

#include "dircuts/errors.hpp"

namespace dircuts {

void Digraph::check_vertex(int v, const char* what) const {
    if (v < 0 || v >= vertex_count())
        throw InputError(std::string(what) + ": vertex id " + std::to_string(v) +
                         " out of range (vertex count " + std::to_string(vertex_count()) + ")");
}

int Digraph::add_vertex(std::string label) {
    labels_.push_back(std::move(label));
    out_.emplace_back();
    in_.emplace_back();
    return vertex_count() - 1;
}

void Digraph::add_arc(int u, int v) {
    check_vertex(u, "add_arc");
    check_vertex(v, "add_arc");
    if (u == v) throw InputError("add_arc: self-loop at vertex " + std::to_string(u));
    int id = static_cast<int>(arcs_.size());
    arcs_.emplace_back(u, v);
    out_[static_cast<std::size_t>(u)].push_back(id);
    in_[static_cast<std::size_t>(v)].push_back(id);
}

bool Digraph::add_arc_once(int u, int v) {
    if (has_arc(u, v)) return false;
    add_arc(u, v);
    return true;
}

bool Digraph::has_arc(int u, int v) const {
    check_vertex(u, "has_arc");
    check_vertex(v, "has_arc");
    for (int id : out_[static_cast<std::size_t>(u)])
        if (arcs_[static_cast<std::size_t>(id)].second == v) return true;
    return false;
}

void Digraph::set_label(int v, std::string label) {
    check_vertex(v, "set_label");
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

bool Digraph::is_simple() const {
    ArcSet sorted = arcs_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<bool> reach_mask(const Digraph& g, std::span<const int> sources,
                             const std::vector<bool>* removed_vertices,
                             const std::vector<bool>* removed_arcs) {
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> stack;
    auto vertex_ok = [&](int v) { return !removed_vertices || !(*removed_vertices)[static_cast<std::size_t>(v)]; };
    for (int s : sources) {
        g.check_vertex(s, "reachable");
        if (vertex_ok(s) && !seen[static_cast<std::size_t>(s)]) {
            seen[static_cast<std::size_t>(s)] = true;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int id : g.out_arc_ids(u)) {
            if (removed_arcs && (*removed_arcs)[static_cast<std::size_t>(id)]) continue;
            int v = g.arc(id).second;
            if (!vertex_ok(v) || seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = true;
            stack.push_back(v);
        }
    }
    return seen;
}

std::vector<int> reachable(const Digraph& g, std::span<const int> sources) {
    std::vector<bool> seen = reach_mask(g, sources);
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

Digraph reverse_graph(const Digraph& g) {
    Digraph out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out.set_label(v, g.label(v));
    for (const Arc& a : g.arcs()) out.add_arc(a.second, a.first);
    return out;
}

Digraph bypass_vertex(const Digraph& g, int v, std::span<const int> protected_vertices) {
    g.check_vertex(v, "bypass_vertex");
    for (int p : protected_vertices)
        if (p == v)
            throw InputError("bypass_vertex: vertex " + std::to_string(v) + " is protected");

    Digraph out(g.vertex_count() - 1);
    auto remap = [v](int w) { return w < v ? w : w - 1; };
    for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v) out.set_label(remap(w), g.label(w));
    for (const Arc& a : g.arcs()) {
        if (a.first == v || a.second == v) continue;
        out.add_arc_once(remap(a.first), remap(a.second));
    }
    for (int in_id : g.in_arc_ids(v)) {
        int u = g.arc(in_id).first;
        if (u == v) continue;
        for (int out_id : g.out_arc_ids(v)) {
            int w = g.arc(out_id).second;
            if (w == v || u == w) continue;
            out.add_arc_once(remap(u), remap(w));
        }
    }
    return out;
}

std::vector<bool> arc_id_mask(const Digraph& g, const ArcSet& set) {
    std::vector<bool> mask(static_cast<std::size_t>(g.arc_count()), false);
    ArcSet sorted = set;
    std::sort(sorted.begin(), sorted.end());
    for (int id = 0; id < g.arc_count(); ++id)
        if (std::binary_search(sorted.begin(), sorted.end(), g.arc(id)))
            mask[static_cast<std::size_t>(id)] = true;
    return mask;
}

ArcSet as_arc_set(ArcSet arcs) {
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

}  // namespace dircuts
