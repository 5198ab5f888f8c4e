#include "dircuts/stor.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "bitreach.hpp"
#include "dircuts/errors.hpp"

namespace dircuts {

void validate_stor(const StorInstance& inst) {
    for (const Arc& pair : inst.terminal_pairs) {
        inst.graph.check_vertex(pair.first, "stor terminal");
        inst.graph.check_vertex(pair.second, "stor terminal");
        if (pair.first == pair.second)
            throw InputError("stor: terminal pair with equal endpoints " +
                             std::to_string(pair.first));
    }
}

namespace {

void check_orientation_size(const StorInstance& inst, const Orientation& o) {
    if (static_cast<int>(o.dir.size()) != inst.graph.edge_count())
        throw InputError("orientation: expected " + std::to_string(inst.graph.edge_count()) +
                         " directions, got " + std::to_string(o.dir.size()));
}

}  // namespace

bool verify_orientation(const StorInstance& inst, const Orientation& o) {
    validate_stor(inst);
    check_orientation_size(inst, o);

    BitAdjacency adj(inst.graph.vertex_count());
    for (const Arc& arc : inst.graph.arcs()) adj.add(arc.first, arc.second);
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
        const UndirectedEdge& edge = inst.graph.edge(e);
        if (o.dir[static_cast<std::size_t>(e)] == EdgeDir::Forward)
            adj.add(edge.u, edge.v);
        else
            adj.add(edge.v, edge.u);
    }
    BitAdjacency::Scratch scratch;
    for (const Arc& pair : inst.terminal_pairs)
        if (!adj.reaches(pair.first, pair.second, nullptr, scratch)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Exact solver.
// ---------------------------------------------------------------------------

namespace {

struct StorSolver {
    const StorInstance& inst;
    int edge_count;
    BitAdjacency adj;  // arcs plus both directions of every unassigned edge
    BitAdjacency::Scratch scratch;
    std::vector<EdgeDir> dir;
    std::size_t first_check = 0;  // start connectivity scans at the last failure

    explicit StorSolver(const StorInstance& instance)
        : inst(instance),
          edge_count(instance.graph.edge_count()),
          adj(instance.graph.vertex_count()),
          dir(static_cast<std::size_t>(instance.graph.edge_count()), EdgeDir::Forward) {
        for (const Arc& arc : inst.graph.arcs()) adj.add(arc.first, arc.second);
        for (const UndirectedEdge& edge : inst.graph.edges()) {
            adj.add(edge.u, edge.v);
            adj.add(edge.v, edge.u);
        }
    }

    // Sound pruning: an unassigned edge is traversable both ways, so a pair
    // disconnected here stays disconnected under every completion.
    bool all_connected() {
        const std::vector<Arc>& pairs = inst.terminal_pairs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::size_t at = (first_check + i) % pairs.size();
            const Arc& pair = pairs[at];
            if (!adj.reaches(pair.first, pair.second, nullptr, scratch)) {
                first_check = at;
                return false;
            }
        }
        return true;
    }

    bool dfs(int e) {
        if (!all_connected()) return false;
        if (e == edge_count) return true;
        const UndirectedEdge& edge = inst.graph.edge(e);

        dir[static_cast<std::size_t>(e)] = EdgeDir::Forward;
        adj.remove(edge.v, edge.u);
        if (dfs(e + 1)) return true;
        adj.add(edge.v, edge.u);

        dir[static_cast<std::size_t>(e)] = EdgeDir::Backward;
        adj.remove(edge.u, edge.v);
        if (dfs(e + 1)) return true;
        adj.add(edge.u, edge.v);
        return false;
    }
};

}  // namespace

std::optional<Orientation> solve_stor_exact(const StorInstance& inst,
                                            const StorSolveOptions& options) {
    validate_stor(inst);
    if (inst.graph.edge_count() > options.max_edges)
        throw ResourceLimitError("stor solver: " + std::to_string(inst.graph.edge_count()) +
                                 " undirected edges exceed the limit of " +
                                 std::to_string(options.max_edges));
    StorSolver solver(inst);
    if (!solver.dfs(0)) return std::nullopt;
    return Orientation{std::move(solver.dir)};
}

// ---------------------------------------------------------------------------
// Reduction.
// ---------------------------------------------------------------------------

namespace {

std::string indexed_tag(const char* role, int i, int j, int a) {
    return std::string(role) + ":" + std::to_string(i) + ":" + std::to_string(j) + ":" +
           std::to_string(a);
}

// One undirected path of n vertices with its n-1 edges; returns vertex ids by
// position (index a-1) and edge indices by position (edge b at index b-1).
struct EmittedUPath {
    std::vector<int> vertex, edge;
};

EmittedUPath emit_undirected_path(MixedGraph& g, int n, const std::string& tag) {
    EmittedUPath path;
    for (int a = 1; a <= n; ++a) {
        path.vertex.push_back(g.add_vertex(tag + ":" + std::to_string(a)));
        if (a > 1)
            path.edge.push_back(g.add_edge(path.vertex[static_cast<std::size_t>(a - 2)],
                                           path.vertex[static_cast<std::size_t>(a - 1)]));
    }
    return path;
}

}  // namespace

StorInstance reduce_psi_to_stor(const PsiInstance& source) {
    validate_psi(source);
    if (!is_normalized(source))
        throw InputError("reduce_psi_to_stor: instance must be normalized first");

    const int n = source.class_size;
    const int ell = source.pattern_vertex_count;

    StorInstance out;
    MixedGraph& g = out.graph;

    std::vector<Arc> ordered_pairs;
    for (const Arc& e : source.pattern_edges) {
        ordered_pairs.emplace_back(e.first, e.second);
        ordered_pairs.emplace_back(e.second, e.first);
    }

    std::map<Arc, EmittedUPath> x_paths;
    for (const Arc& pr : ordered_pairs)
        x_paths[pr] = emit_undirected_path(g, n, "x:" + std::to_string(pr.first) + ":" +
                                                     std::to_string(pr.second));
    std::map<int, EmittedUPath> c_paths, d_paths;
    for (int i = 1; i <= ell; ++i) {
        c_paths[i] = emit_undirected_path(g, n, "c:" + std::to_string(i));
        d_paths[i] = emit_undirected_path(g, n, "d:" + std::to_string(i));
    }

    // Grid cells: one vertex when the host edge exists, otherwise a SW/NE
    // half pair joined by an undirected edge.  The SW half takes the incoming
    // horizontal and outgoing vertical arc, the NE half the other two, so no
    // single orientation of the joining edge supports both a west-to-east and
    // a north-to-south traversal.
    struct BuiltCell {
        int sw, ne;
    };
    std::map<Arc, std::vector<std::vector<BuiltCell>>> grids;
    for (const Arc& e : source.pattern_edges) {
        auto& grid = grids[e];
        grid.assign(static_cast<std::size_t>(n),
                    std::vector<BuiltCell>(static_cast<std::size_t>(n)));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                BuiltCell& cell = grid[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
                if (source.has_host_edge(source.member(e.first, a), source.member(e.second, b))) {
                    cell.sw = cell.ne = g.add_vertex(
                        indexed_tag("p", e.first, e.second, a) + ":" + std::to_string(b));
                } else {
                    cell.sw = g.add_vertex(indexed_tag("psw", e.first, e.second, a) + ":" +
                                           std::to_string(b));
                    cell.ne = g.add_vertex(indexed_tag("pne", e.first, e.second, a) + ":" +
                                           std::to_string(b));
                    g.add_edge(cell.sw, cell.ne);
                }
            }
    }

    std::map<Arc, EmittedUPath> y_paths;
    for (const Arc& pr : ordered_pairs)
        y_paths[pr] = emit_undirected_path(g, n, "y:" + std::to_string(pr.first) + ":" +
                                                     std::to_string(pr.second));

    // Synchronization arcs between the paths.
    for (int i = 1; i <= ell; ++i)
        for (int a = 1; a <= n; ++a)
            g.add_arc(c_paths[i].vertex[static_cast<std::size_t>(a - 1)],
                      d_paths[i].vertex[static_cast<std::size_t>(a - 1)]);
    for (const Arc& pr : ordered_pairs)
        for (int a = 1; a <= n; ++a) {
            g.add_arc(x_paths[pr].vertex[static_cast<std::size_t>(a - 1)],
                      d_paths[pr.first].vertex[static_cast<std::size_t>(a - 1)]);
            g.add_arc(c_paths[pr.first].vertex[static_cast<std::size_t>(a - 1)],
                      y_paths[pr].vertex[static_cast<std::size_t>(a - 1)]);
        }

    // Grid arcs; the forward pair rides rows west to east, the reversed pair
    // rides columns north to south.
    for (const Arc& e : source.pattern_edges) {
        const auto& grid = grids[e];
        auto cell = [&](int a, int b) -> const BuiltCell& {
            return grid[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
        };
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a < n) g.add_arc(cell(a, b).sw, cell(a + 1, b).ne);
                if (b < n) g.add_arc(cell(a, b).ne, cell(a, b + 1).sw);
            }
        const EmittedUPath& x_fwd = x_paths[e];
        const EmittedUPath& y_fwd = y_paths[e];
        const EmittedUPath& x_rev = x_paths[Arc{e.second, e.first}];
        const EmittedUPath& y_rev = y_paths[Arc{e.second, e.first}];
        for (int a = 1; a <= n; ++a) {
            g.add_arc(x_fwd.vertex[static_cast<std::size_t>(a - 1)], cell(a, 1).sw);
            g.add_arc(cell(a, n).ne, y_fwd.vertex[static_cast<std::size_t>(a - 1)]);
            g.add_arc(x_rev.vertex[static_cast<std::size_t>(a - 1)], cell(1, a).ne);
            g.add_arc(cell(n, a).sw, y_rev.vertex[static_cast<std::size_t>(a - 1)]);
        }
    }

    // Terminal pairs: both sweep directions per choice/check pair, four
    // copy-enforcing pairs per transfer pair, one grid-crossing pair per
    // transfer path.
    for (int i = 1; i <= ell; ++i) {
        out.terminal_pairs.emplace_back(c_paths[i].vertex.front(), d_paths[i].vertex.back());
        out.terminal_pairs.emplace_back(c_paths[i].vertex.back(), d_paths[i].vertex.front());
    }
    for (const Arc& pr : ordered_pairs) {
        const EmittedUPath& x = x_paths[pr];
        const EmittedUPath& y = y_paths[pr];
        const EmittedUPath& c = c_paths[pr.first];
        const EmittedUPath& d = d_paths[pr.first];
        out.terminal_pairs.emplace_back(x.vertex.front(), d.vertex.back());
        out.terminal_pairs.emplace_back(x.vertex.back(), d.vertex.front());
        out.terminal_pairs.emplace_back(c.vertex.front(), y.vertex.back());
        out.terminal_pairs.emplace_back(c.vertex.back(), y.vertex.front());
    }
    for (const Arc& e : source.pattern_edges) {
        out.terminal_pairs.emplace_back(x_paths[e].vertex.back(), y_paths[e].vertex.front());
        out.terminal_pairs.emplace_back(x_paths[Arc{e.second, e.first}].vertex.back(),
                                        y_paths[Arc{e.second, e.first}].vertex.front());
    }

    validate_stor(out);
    return out;
}

// ---------------------------------------------------------------------------
// Layout recovery from labels.
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_label(const std::string& label) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t colon = label.find(':', start);
        if (colon == std::string::npos) {
            parts.push_back(label.substr(start));
            return parts;
        }
        parts.push_back(label.substr(start, colon - start));
        start = colon + 1;
    }
}

int parse_label_int(const std::string& text, const std::string& label) {
    if (text.empty() || text.size() > 9)
        throw InputError("stor layout: bad number in label '" + label + "'");
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw InputError("stor layout: bad number in label '" + label + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

using PosMap = std::map<int, int>;

void insert_pos(PosMap& m, int pos, int v, const std::string& label) {
    if (!m.emplace(pos, v).second)
        throw InputError("stor layout: duplicate label '" + label + "'");
}

std::vector<int> compact_positions(const PosMap& m, int lo, int hi, const std::string& what) {
    std::vector<int> out;
    for (int pos = lo; pos <= hi; ++pos) {
        auto it = m.find(pos);
        if (it == m.end())
            throw InputError("stor layout: " + what + " is missing position " +
                             std::to_string(pos));
        out.push_back(it->second);
    }
    if (static_cast<int>(m.size()) != hi - lo + 1)
        throw InputError("stor layout: " + what + " has a position outside " +
                         std::to_string(lo) + ".." + std::to_string(hi));
    return out;
}

}  // namespace

StorLayout StorLayout::from_labels(const StorInstance& inst) {
    validate_stor(inst);
    StorLayout layout;
    std::map<int, PosMap> c_pos, d_pos;
    std::map<Arc, PosMap> x_pos, y_pos;
    std::map<Arc, std::map<Arc, int>> whole_pos, sw_pos, ne_pos;

    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const std::string& label = inst.graph.label(v);
        std::vector<std::string> parts = split_label(label);
        const std::string& role = parts[0];
        auto bad = [&]() -> InputError {
            return InputError("stor layout: unrecognized label '" + label + "'");
        };
        if (parts.size() == 3 && (role == "c" || role == "d")) {
            int i = parse_label_int(parts[1], label);
            int a = parse_label_int(parts[2], label);
            insert_pos(role == "c" ? c_pos[i] : d_pos[i], a, v, label);
        } else if (parts.size() == 4 && (role == "x" || role == "y")) {
            int i = parse_label_int(parts[1], label);
            int j = parse_label_int(parts[2], label);
            int a = parse_label_int(parts[3], label);
            if (i == j) throw bad();
            insert_pos(role == "x" ? x_pos[Arc{i, j}] : y_pos[Arc{i, j}], a, v, label);
        } else if (parts.size() == 5 && (role == "p" || role == "psw" || role == "pne")) {
            int i = parse_label_int(parts[1], label);
            int j = parse_label_int(parts[2], label);
            int a = parse_label_int(parts[3], label);
            int b = parse_label_int(parts[4], label);
            if (i >= j) throw bad();
            auto& m = role == "p" ? whole_pos : role == "psw" ? sw_pos : ne_pos;
            if (!m[Arc{i, j}].emplace(Arc{a, b}, v).second)
                throw InputError("stor layout: duplicate label '" + label + "'");
        } else {
            throw bad();
        }
    }

    // Pattern shape from the grids and choice paths.
    layout.ell = c_pos.empty() ? 0 : c_pos.rbegin()->first;
    if (static_cast<int>(c_pos.size()) != layout.ell || d_pos.size() != c_pos.size())
        throw InputError("stor layout: choice/check paths are not numbered 1..l");
    {
        std::vector<Arc> grid_keys;
        for (const auto& [edge, cells] : whole_pos) grid_keys.push_back(edge);
        for (const auto& [edge, cells] : sw_pos)
            if (!std::binary_search(grid_keys.begin(), grid_keys.end(), edge))
                grid_keys.push_back(edge);
        std::sort(grid_keys.begin(), grid_keys.end());
        layout.pattern_edges = std::move(grid_keys);
    }
    for (const Arc& e : layout.pattern_edges)
        if (e.first < 1 || e.second > layout.ell)
            throw InputError("stor layout: grid for a pattern edge outside 1.." +
                             std::to_string(layout.ell));
    std::vector<int> degree(static_cast<std::size_t>(layout.ell) + 1, 0);
    for (const Arc& e : layout.pattern_edges) {
        ++degree[static_cast<std::size_t>(e.first)];
        ++degree[static_cast<std::size_t>(e.second)];
    }
    for (int i = 1; i <= layout.ell; ++i) {
        if (!c_pos.count(i) || !d_pos.count(i))
            throw InputError("stor layout: missing choice or check path for pattern vertex " +
                             std::to_string(i));
        if (degree[static_cast<std::size_t>(i)] == 0)
            throw InputError("stor layout: pattern vertex " + std::to_string(i) +
                             " is on no pattern edge");
    }
    {
        std::vector<Arc> expected_pairs;
        for (const Arc& e : layout.pattern_edges) {
            expected_pairs.emplace_back(e.first, e.second);
            expected_pairs.emplace_back(e.second, e.first);
        }
        std::sort(expected_pairs.begin(), expected_pairs.end());
        auto keys_of = [](const std::map<Arc, PosMap>& m) {
            std::vector<Arc> keys;
            for (const auto& [key, value] : m) keys.push_back(key);
            return keys;
        };
        if (keys_of(x_pos) != expected_pairs || keys_of(y_pos) != expected_pairs)
            throw InputError(
                "stor layout: transfer paths do not match the grids' pattern edges");
    }

    layout.n = c_pos.empty() ? 0 : c_pos.begin()->second.rbegin()->first;
    if (layout.ell > 0 && layout.n < 1)
        throw InputError("stor layout: class size must be at least 1");
    const int n = layout.n;

    // Edge lookup by endpoints, used to find the path and split-cell edges.
    std::map<Arc, int> edge_at;
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
        const UndirectedEdge& edge = inst.graph.edge(e);
        edge_at[Arc{std::min(edge.u, edge.v), std::max(edge.u, edge.v)}] = e;
    }
    auto find_edge = [&](int u, int v, const std::string& what) {
        auto it = edge_at.find(Arc{std::min(u, v), std::max(u, v)});
        if (it == edge_at.end())
            throw InputError("stor layout: missing undirected edge inside " + what);
        return it->second;
    };
    auto path_edges = [&](const std::vector<int>& vertices, const std::string& what) {
        std::vector<int> edges;
        for (std::size_t a = 0; a + 1 < vertices.size(); ++a)
            edges.push_back(find_edge(vertices[a], vertices[a + 1], what));
        return edges;
    };

    for (int i = 1; i <= layout.ell; ++i) {
        std::string what_c = "choice path " + std::to_string(i);
        std::string what_d = "check path " + std::to_string(i);
        layout.c[i] = compact_positions(c_pos[i], 1, n, what_c);
        layout.d[i] = compact_positions(d_pos[i], 1, n, what_d);
        layout.c_edge[i] = path_edges(layout.c[i], what_c);
        layout.d_edge[i] = path_edges(layout.d[i], what_d);
    }
    for (const auto& [key, m] : x_pos) {
        std::string what = "transfer path x:" + std::to_string(key.first) + ":" +
                           std::to_string(key.second);
        layout.x[key] = compact_positions(m, 1, n, what);
        layout.x_edge[key] = path_edges(layout.x[key], what);
    }
    for (const auto& [key, m] : y_pos) {
        std::string what = "transfer path y:" + std::to_string(key.first) + ":" +
                           std::to_string(key.second);
        layout.y[key] = compact_positions(m, 1, n, what);
        layout.y_edge[key] = path_edges(layout.y[key], what);
    }

    int split_cells = 0;
    for (const Arc& e : layout.pattern_edges) {
        auto& grid = layout.grid[e];
        grid.assign(static_cast<std::size_t>(n), std::vector<Cell>(static_cast<std::size_t>(n)));
        const auto& whole = whole_pos[e];
        const auto& sw = sw_pos[e];
        const auto& ne = ne_pos[e];
        std::string grid_name = "grid " + std::to_string(e.first) + ":" + std::to_string(e.second);
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                Cell& cell = grid[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
                std::string cell_name = grid_name + " cell " + std::to_string(a) + ":" +
                                        std::to_string(b);
                auto whole_it = whole.find(Arc{a, b});
                auto sw_it = sw.find(Arc{a, b});
                auto ne_it = ne.find(Arc{a, b});
                if (whole_it != whole.end()) {
                    if (sw_it != sw.end() || ne_it != ne.end())
                        throw InputError("stor layout: " + cell_name +
                                         " is both intact and split");
                    cell.sw = cell.ne = whole_it->second;
                } else if (sw_it != sw.end() && ne_it != ne.end()) {
                    cell.sw = sw_it->second;
                    cell.ne = ne_it->second;
                    cell.edge = find_edge(cell.sw, cell.ne, cell_name);
                    ++split_cells;
                } else {
                    throw InputError("stor layout: " + cell_name + " is incomplete");
                }
            }
        // The cell loop consumed one whole or one SW/NE pair per coordinate,
        // so any surplus means labels outside the n-by-n range.
        if (static_cast<int>(whole.size() + sw.size()) != n * n || sw.size() != ne.size())
            throw InputError("stor layout: " + grid_name + " has cells outside " +
                             std::to_string(n) + "x" + std::to_string(n));
    }

    // Every undirected edge must be a path edge or a split-cell edge.
    const long long k = static_cast<long long>(layout.pattern_edges.size());
    long long expected_edges =
        static_cast<long long>(n - 1) * (2LL * layout.ell + 4 * k) + split_cells;
    if (layout.ell == 0) expected_edges = 0;
    if (inst.graph.edge_count() != expected_edges)
        throw InputError("stor layout: graph has stray undirected edges");
    // And every arc one of the synchronization, grid, or boundary arcs.
    long long expected_arcs = static_cast<long long>(layout.ell) * n + 4LL * k * n +
                              k * (2LL * n * (n - 1) + 4LL * n);
    if (inst.graph.arc_count() != expected_arcs)
        throw InputError("stor layout: graph has stray arcs");

    // The terminal list must be exactly the canonical one, in order.
    std::vector<Arc> expected_pairs;
    for (int i = 1; i <= layout.ell; ++i) {
        expected_pairs.emplace_back(layout.c[i].front(), layout.d[i].back());
        expected_pairs.emplace_back(layout.c[i].back(), layout.d[i].front());
    }
    for (const Arc& e : layout.pattern_edges)
        for (const Arc& pr : {e, Arc{e.second, e.first}}) {
            expected_pairs.emplace_back(layout.x[pr].front(), layout.d[pr.first].back());
            expected_pairs.emplace_back(layout.x[pr].back(), layout.d[pr.first].front());
            expected_pairs.emplace_back(layout.c[pr.first].front(), layout.y[pr].back());
            expected_pairs.emplace_back(layout.c[pr.first].back(), layout.y[pr].front());
        }
    for (const Arc& e : layout.pattern_edges) {
        expected_pairs.emplace_back(layout.x[e].back(), layout.y[e].front());
        expected_pairs.emplace_back(layout.x[Arc{e.second, e.first}].back(),
                                    layout.y[Arc{e.second, e.first}].front());
    }
    if (inst.terminal_pairs != expected_pairs)
        throw InputError("stor layout: terminal pairs are not the canonical list");
    return layout;
}

// ---------------------------------------------------------------------------
// Lift and extraction.
// ---------------------------------------------------------------------------

namespace {

// Orientation value that directs edge `index` as tail -> head.
EdgeDir orient_as(const MixedGraph& g, int index, int tail, int head) {
    const UndirectedEdge& e = g.edge(index);
    if (e.u == tail && e.v == head) return EdgeDir::Forward;
    if (e.v == tail && e.u == head) return EdgeDir::Backward;
    throw InputError("orient_as: edge " + std::to_string(index) + " does not join " +
                     std::to_string(tail) + " and " + std::to_string(head));
}

// Shape and host-edge consistency between a recovered layout and the claimed
// source instance: split cells must mark exactly the missing host edges.
void check_layout_matches_source(const StorLayout& layout, const PsiInstance& source,
                                 const char* who) {
    if (layout.ell != source.pattern_vertex_count ||
        layout.pattern_edges != source.pattern_edges ||
        (layout.ell > 0 && layout.n != source.class_size))
        throw InputError(std::string(who) +
                         ": the reduced instance does not match the source instance shape");
    for (const auto& [edge, grid] : layout.grid)
        for (int a = 1; a <= layout.n; ++a)
            for (int b = 1; b <= layout.n; ++b) {
                bool host = source.has_host_edge(source.member(edge.first, a),
                                                 source.member(edge.second, b));
                if (grid[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]
                        .split() == host)
                    throw InputError(std::string(who) +
                                     ": grid cells do not match the source host edges");
            }
}

}  // namespace

Orientation lift_hom_to_orientation(const PsiInstance& source, const Homomorphism& h,
                                    const StorInstance& reduced) {
    validate_psi(source);
    if (!is_partitioned_homomorphism(source, h))
        throw InputError("lift_hom_to_orientation: the assignment is not a valid embedding");
    StorLayout layout = StorLayout::from_labels(reduced);
    check_layout_matches_source(layout, source, "lift_hom_to_orientation");

    auto image = [&](int i) { return h.image[static_cast<std::size_t>(i - 1)]; };
    Orientation o;
    o.dir.assign(static_cast<std::size_t>(reduced.graph.edge_count()), EdgeDir::Forward);

    // Path edge b joins positions b and b+1.  "Towards position a" points the
    // first a-1 edges up the path and the rest down; "away from a" mirrors it.
    auto towards = [&](const std::vector<int>& vertices, const std::vector<int>& edges, int a) {
        for (std::size_t b = 1; b < vertices.size(); ++b) {
            int lo = vertices[b - 1], hi = vertices[b];
            int tail = static_cast<int>(b) < a ? lo : hi;
            int head = static_cast<int>(b) < a ? hi : lo;
            o.dir[static_cast<std::size_t>(edges[b - 1])] =
                orient_as(reduced.graph, edges[b - 1], tail, head);
        }
    };
    auto away_from = [&](const std::vector<int>& vertices, const std::vector<int>& edges, int a) {
        for (std::size_t b = 1; b < vertices.size(); ++b) {
            int lo = vertices[b - 1], hi = vertices[b];
            int tail = static_cast<int>(b) < a ? hi : lo;
            int head = static_cast<int>(b) < a ? lo : hi;
            o.dir[static_cast<std::size_t>(edges[b - 1])] =
                orient_as(reduced.graph, edges[b - 1], tail, head);
        }
    };

    for (int i = 1; i <= layout.ell; ++i) {
        towards(layout.c.at(i), layout.c_edge.at(i), image(i));
        away_from(layout.d.at(i), layout.d_edge.at(i), image(i));
    }
    for (const auto& [key, vertices] : layout.x)
        towards(vertices, layout.x_edge.at(key), image(key.first));
    for (const auto& [key, vertices] : layout.y)
        away_from(vertices, layout.y_edge.at(key), image(key.first));

    // Split cells flow SW -> NE so the assigned row can cross west to east;
    // the assigned column flows NE -> SW to cross north to south.  The cell
    // on both never splits, because the assignment maps its pattern edge to a
    // host edge.
    for (const auto& [edge, grid] : layout.grid) {
        for (const auto& row : grid)
            for (const StorLayout::Cell& cell : row)
                if (cell.split())
                    o.dir[static_cast<std::size_t>(cell.edge)] =
                        orient_as(reduced.graph, cell.edge, cell.sw, cell.ne);
        int column = image(edge.second);
        for (int a = 1; a <= layout.n; ++a) {
            const StorLayout::Cell& cell =
                grid[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(column - 1)];
            if (cell.split())
                o.dir[static_cast<std::size_t>(cell.edge)] =
                    orient_as(reduced.graph, cell.edge, cell.ne, cell.sw);
        }
    }
    return o;
}

Homomorphism extract_hom_from_orientation(const StorInstance& reduced, const Orientation& o,
                                          const PsiInstance& source) {
    validate_psi(source);
    StorLayout layout = StorLayout::from_labels(reduced);
    check_layout_matches_source(layout, source, "extract_hom_from_orientation");
    check_orientation_size(reduced, o);

    Homomorphism h;
    for (int i = 1; i <= layout.ell; ++i) {
        const std::vector<int>& vertices = layout.c.at(i);
        const std::vector<int>& edges = layout.c_edge.at(i);
        // "Towards position a" along the choice path is a run of up-edges
        // followed by a run of down-edges; the break point is the position.
        int position = 1;
        bool downhill = false;
        for (std::size_t b = 1; b < vertices.size(); ++b) {
            EdgeDir up = orient_as(reduced.graph, edges[b - 1], vertices[b - 1], vertices[b]);
            if (o.dir[static_cast<std::size_t>(edges[b - 1])] == up) {
                if (downhill)
                    throw ContractViolation(
                        "extract_hom_from_orientation: choice path " + std::to_string(i) +
                        " is not oriented towards a single position");
                position = static_cast<int>(b) + 1;
            } else {
                downhill = true;
            }
        }
        h.image.push_back(position);
    }
    if (!is_partitioned_homomorphism(source, h))
        throw ContractViolation(
            "extract_hom_from_orientation: the extracted assignment is not a valid embedding");
    return h;
}

}  // namespace dircuts
