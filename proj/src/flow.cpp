#include "dircuts/flow.hpp"

#include <algorithm>
#include <queue>

#include "dircuts/errors.hpp"

namespace dircuts {

namespace {

// Small max-flow network with paired residual edges (edge id ^ 1 is the
// reverse).  BFS augmenting paths; everything here runs at desk scale.
struct FlowNetwork {
    struct Edge {
        int to;
        long long cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;

    explicit FlowNetwork(int nodes) : adj(nodes) {}

    int add_edge(int u, int v, long long cap) {
        int id = static_cast<int>(edges.size());
        edges.push_back({v, cap});
        edges.push_back({u, 0});
        adj[static_cast<std::size_t>(u)].push_back(id);
        adj[static_cast<std::size_t>(v)].push_back(id + 1);
        return id;
    }

    // Augments one unit-s at a time up to `limit` total; returns the flow
    // value reached (stops early once it exceeds limit - 1 only if capped by
    // limit itself).
    long long max_flow(int s, int t, long long limit) {
        long long flow = 0;
        std::vector<int> parent_edge(adj.size());
        while (flow < limit) {
            std::fill(parent_edge.begin(), parent_edge.end(), -1);
            std::queue<int> q;
            q.push(s);
            parent_edge[static_cast<std::size_t>(s)] = -2;
            bool found = false;
            while (!q.empty() && !found) {
                int u = q.front();
                q.pop();
                for (int id : adj[static_cast<std::size_t>(u)]) {
                    const Edge& e = edges[static_cast<std::size_t>(id)];
                    if (e.cap <= 0 || parent_edge[static_cast<std::size_t>(e.to)] != -1) continue;
                    parent_edge[static_cast<std::size_t>(e.to)] = id;
                    if (e.to == t) {
                        found = true;
                        break;
                    }
                    q.push(e.to);
                }
            }
            if (!found) break;
            long long push = ~0LL >> 1;
            for (int v = t; v != s;) {
                int id = parent_edge[static_cast<std::size_t>(v)];
                push = std::min(push, edges[static_cast<std::size_t>(id)].cap);
                v = edges[static_cast<std::size_t>(id ^ 1)].to;
            }
            push = std::min(push, limit - flow);
            for (int v = t; v != s;) {
                int id = parent_edge[static_cast<std::size_t>(v)];
                edges[static_cast<std::size_t>(id)].cap -= push;
                edges[static_cast<std::size_t>(id ^ 1)].cap += push;
                v = edges[static_cast<std::size_t>(id ^ 1)].to;
            }
            flow += push;
        }
        return flow;
    }

    // Nodes reachable from s along positive-capacity residual edges.
    std::vector<bool> residual_reach(int s) const {
        std::vector<bool> seen(adj.size(), false);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int id : adj[static_cast<std::size_t>(u)]) {
                const Edge& e = edges[static_cast<std::size_t>(id)];
                if (e.cap <= 0 || seen[static_cast<std::size_t>(e.to)]) continue;
                seen[static_cast<std::size_t>(e.to)] = true;
                stack.push_back(e.to);
            }
        }
        return seen;
    }

    // Nodes that can reach t along positive-capacity residual edges.
    std::vector<bool> residual_coreach(int t) const {
        std::vector<bool> seen(adj.size(), false);
        std::vector<int> stack{t};
        seen[static_cast<std::size_t>(t)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            // A residual edge v -> u with positive capacity is the twin
            // (id ^ 1) of some edge id listed at u, since twins connect the
            // same two nodes in opposite directions.
            for (int id : adj[static_cast<std::size_t>(u)]) {
                int v = edges[static_cast<std::size_t>(id)].to;
                if (edges[static_cast<std::size_t>(id ^ 1)].cap <= 0) continue;
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
        }
        return seen;
    }
};

}  // namespace

std::optional<MinArcCut> min_arc_cut(const Digraph& g, int s, int t, int cap) {
    g.check_vertex(s, "min_arc_cut");
    g.check_vertex(t, "min_arc_cut");
    if (s == t) throw InputError("min_arc_cut: source equals sink");
    if (cap < 0) throw InputError("min_arc_cut: negative cap");

    FlowNetwork net(g.vertex_count());
    for (const Arc& a : g.arcs()) net.add_edge(a.first, a.second, 1);
    long long flow = net.max_flow(s, t, static_cast<long long>(cap) + 1);
    if (flow > cap) return std::nullopt;

    MinArcCut out;
    out.source_side = net.residual_reach(s);
    for (const Arc& a : g.arcs())
        if (out.source_side[static_cast<std::size_t>(a.first)] &&
            !out.source_side[static_cast<std::size_t>(a.second)])
            out.arcs.push_back(a);
    std::sort(out.arcs.begin(), out.arcs.end());
    return out;
}

SourceSetCut min_arc_cut_from_set(const Digraph& g, std::span<const int> sources, int t, int cap) {
    g.check_vertex(t, "min_arc_cut_from_set");
    if (sources.empty()) throw InputError("min_arc_cut_from_set: empty source set");
    for (int s : sources) {
        g.check_vertex(s, "min_arc_cut_from_set");
        if (s == t) throw InputError("min_arc_cut_from_set: sink listed as source");
    }
    if (cap < 0) throw InputError("min_arc_cut_from_set: negative cap");

    int super = g.vertex_count();
    FlowNetwork net(g.vertex_count() + 1);
    long long big = g.arc_count() + 1;
    for (const Arc& a : g.arcs()) net.add_edge(a.first, a.second, 1);
    std::vector<bool> is_source(static_cast<std::size_t>(g.vertex_count()), false);
    for (int s : sources) {
        if (!is_source[static_cast<std::size_t>(s)]) net.add_edge(super, s, big);
        is_source[static_cast<std::size_t>(s)] = true;
    }

    SourceSetCut out;
    long long flow = net.max_flow(super, t, static_cast<long long>(cap) + 1);
    out.value = static_cast<int>(flow);
    if (flow > cap) return out;

    // Maximal source side: complement of the nodes that still reach t in the
    // residual graph.
    std::vector<bool> to_t = net.residual_coreach(t);
    out.max_source_side.assign(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v = 0; v < g.vertex_count(); ++v)
        out.max_source_side[static_cast<std::size_t>(v)] = !to_t[static_cast<std::size_t>(v)];
    for (const Arc& a : g.arcs())
        if (out.max_source_side[static_cast<std::size_t>(a.first)] &&
            !out.max_source_side[static_cast<std::size_t>(a.second)])
            out.cut.push_back(a);
    std::sort(out.cut.begin(), out.cut.end());
    return out;
}

int vertex_disjoint_paths(const Digraph& g, std::span<const int> from, std::span<const int> to,
                          std::span<const int> forbidden) {
    std::vector<bool> in_from(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> in_to(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> removed(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : from) {
        g.check_vertex(v, "vertex_disjoint_paths");
        if (in_from[static_cast<std::size_t>(v)])
            throw InputError("vertex_disjoint_paths: repeated vertex in source set");
        in_from[static_cast<std::size_t>(v)] = true;
    }
    for (int v : to) {
        g.check_vertex(v, "vertex_disjoint_paths");
        if (in_to[static_cast<std::size_t>(v)])
            throw InputError("vertex_disjoint_paths: repeated vertex in target set");
        in_to[static_cast<std::size_t>(v)] = true;
    }
    for (int v : forbidden) {
        g.check_vertex(v, "vertex_disjoint_paths");
        if (in_from[static_cast<std::size_t>(v)] || in_to[static_cast<std::size_t>(v)])
            throw InputError("vertex_disjoint_paths: forbidden vertex overlaps an endpoint set");
        removed[static_cast<std::size_t>(v)] = true;
    }
    if (from.empty() || to.empty()) return 0;

    // Split transform: v_in = 2v, v_out = 2v + 1.
    int n = g.vertex_count();
    int source = 2 * n, sink = 2 * n + 1;
    long long big = static_cast<long long>(n) + 1;
    FlowNetwork net(2 * n + 2);
    for (int v = 0; v < n; ++v) {
        if (removed[static_cast<std::size_t>(v)]) continue;
        bool endpoint = in_from[static_cast<std::size_t>(v)] || in_to[static_cast<std::size_t>(v)];
        net.add_edge(2 * v, 2 * v + 1, endpoint ? big : 1);
    }
    for (const Arc& a : g.arcs()) {
        if (removed[static_cast<std::size_t>(a.first)] || removed[static_cast<std::size_t>(a.second)])
            continue;
        net.add_edge(2 * a.first + 1, 2 * a.second, big);
    }
    for (int v : from) net.add_edge(source, 2 * v, 1);
    for (int v : to) net.add_edge(2 * v + 1, sink, 1);
    return static_cast<int>(net.max_flow(source, sink, big));
}

}  // namespace dircuts
