#include "dircuts/dirmc.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "bitreach.hpp"
#include "dircuts/errors.hpp"

namespace dircuts {

std::vector<bool> DirMcInstance::terminal_mask() const {
    std::vector<bool> mask(static_cast<std::size_t>(graph.vertex_count()), false);
    for (const Arc& pair : terminal_pairs) {
        mask[static_cast<std::size_t>(pair.first)] = true;
        mask[static_cast<std::size_t>(pair.second)] = true;
    }
    return mask;
}

void validate_dirmc(const DirMcInstance& inst) {
    if (inst.budget < 0) throw InputError("dirmc: negative budget");
    if (static_cast<int>(inst.weight.size()) != inst.graph.vertex_count())
        throw InputError("dirmc: expected " + std::to_string(inst.graph.vertex_count()) +
                         " weights, got " + std::to_string(inst.weight.size()));
    for (const Arc& pair : inst.terminal_pairs) {
        inst.graph.check_vertex(pair.first, "dirmc terminal");
        inst.graph.check_vertex(pair.second, "dirmc terminal");
        if (pair.first == pair.second)
            throw InputError("dirmc: terminal pair with equal endpoints " +
                             std::to_string(pair.first));
    }
    std::vector<bool> terminal = inst.terminal_mask();
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        long long w = inst.weight[static_cast<std::size_t>(v)];
        if (terminal[static_cast<std::size_t>(v)]) {
            if (w != 0)
                throw InputError("dirmc: terminal " + std::to_string(v) +
                                 " must have weight 0, got " + std::to_string(w));
        } else if (w < 1 || w > inst.budget + 1) {
            throw InputError("dirmc: vertex " + std::to_string(v) + " has weight " +
                             std::to_string(w) + " outside 1.." +
                             std::to_string(inst.budget + 1));
        }
    }
}

long long cutset_weight(const DirMcInstance& inst, const Cutset& cut) {
    long long total = 0;
    for (int v : cut.vertices) {
        inst.graph.check_vertex(v, "cutset vertex");
        total += inst.weight[static_cast<std::size_t>(v)];
    }
    return total;
}

namespace {

// Shared precondition of verify/extract: sorted, unique, in-range, deletable
// non-terminals only.
void check_cutset_members(const DirMcInstance& inst, const Cutset& cut) {
    if (!std::is_sorted(cut.vertices.begin(), cut.vertices.end()) ||
        std::adjacent_find(cut.vertices.begin(), cut.vertices.end()) != cut.vertices.end())
        throw InputError("cutset: vertices must be sorted and unique");
    std::vector<bool> terminal = inst.terminal_mask();
    for (int v : cut.vertices) {
        inst.graph.check_vertex(v, "cutset vertex");
        if (terminal[static_cast<std::size_t>(v)])
            throw InputError("cutset: vertex " + std::to_string(v) + " is a terminal");
        if (inst.weight[static_cast<std::size_t>(v)] > inst.budget)
            throw InputError("cutset: vertex " + std::to_string(v) + " is undeletable");
    }
}

}  // namespace

bool verify_multicut(const DirMcInstance& inst, const Cutset& cut) {
    validate_dirmc(inst);
    check_cutset_members(inst, cut);
    if (cutset_weight(inst, cut) > inst.budget) return false;

    std::vector<bool> removed(static_cast<std::size_t>(inst.graph.vertex_count()), false);
    for (int v : cut.vertices) removed[static_cast<std::size_t>(v)] = true;
    for (const Arc& pair : inst.terminal_pairs) {
        int source[] = {pair.first};
        std::vector<bool> seen = reach_mask(inst.graph, source, &removed);
        if (seen[static_cast<std::size_t>(pair.second)]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exact solver.
// ---------------------------------------------------------------------------

namespace {

struct ExactSolver {
    const DirMcInstance& inst;
    const DirMcSolveOptions& options;
    int n;
    BitAdjacency adj;
    std::vector<bool> can_delete;          // non-terminal and weight <= budget
    std::vector<std::uint64_t> deleted;    // vertices deleted on the current branch
    std::vector<char> banned;              // vertices no solution in this subtree may use
    std::vector<int> chosen;               // deleted, in choice order
    long long chosen_weight = 0;
    long long best_weight;                 // budget + 1 until a solution is found
    std::vector<int> best;                 // sorted; meaningful once found
    bool found = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> pack_blocked;  // scratch for the lower bound

    explicit ExactSolver(const DirMcInstance& instance, const DirMcSolveOptions& opts)
        : inst(instance),
          options(opts),
          n(instance.graph.vertex_count()),
          adj(instance.graph.vertex_count()),
          can_delete(static_cast<std::size_t>(n), false),
          deleted(static_cast<std::size_t>(adj.words), 0),
          banned(static_cast<std::size_t>(n), 0),
          best_weight(instance.budget + 1) {
        for (const Arc& arc : inst.graph.arcs()) adj.add(arc.first, arc.second);
        std::vector<bool> terminal = inst.terminal_mask();
        for (int v = 0; v < n; ++v)
            can_delete[static_cast<std::size_t>(v)] =
                !terminal[static_cast<std::size_t>(v)] &&
                inst.weight[static_cast<std::size_t>(v)] <= inst.budget;
    }

    // Shortest terminal path in the graph minus `blocked`, over all pairs;
    // empty when every pair is disconnected.  Ties go to the earlier pair.
    std::vector<int> shortest_uncut(const std::vector<std::uint64_t>& blocked) {
        std::vector<int> shortest;
        for (const Arc& pair : inst.terminal_pairs) {
            std::vector<int> path = adj.shortest_path(pair.first, pair.second, blocked.data());
            if (path.empty()) continue;
            if (shortest.empty() || path.size() < shortest.size()) shortest = std::move(path);
        }
        return shortest;
    }

    // Additive lower bound on the further weight this branch must spend:
    // greedily packs internally-disjoint still-connected terminal paths and
    // charges each its cheapest available internal vertex.  Returns -1 when
    // some path has no available vertex at all (the branch is infeasible).
    long long packing_bound() {
        pack_blocked = deleted;
        long long bound = 0;
        for (const Arc& pair : inst.terminal_pairs) {
            for (;;) {
                if (mask_test(pack_blocked, pair.first)) break;  // absorbed by an earlier path
                std::vector<int> path =
                    adj.shortest_path(pair.first, pair.second, pack_blocked.data());
                if (path.empty()) break;
                long long cheapest = -1;
                for (std::size_t idx = 1; idx + 1 < path.size(); ++idx) {
                    int v = path[idx];
                    mask_set(pack_blocked, v);
                    if (!can_delete[static_cast<std::size_t>(v)] ||
                        banned[static_cast<std::size_t>(v)])
                        continue;
                    long long w = inst.weight[static_cast<std::size_t>(v)];
                    if (cheapest < 0 || w < cheapest) cheapest = w;
                }
                if (cheapest < 0) return -1;
                bound += cheapest;
            }
        }
        return bound;
    }

    void record_solution() {
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        if (!found || chosen_weight < best_weight ||
            (chosen_weight == best_weight && sorted < best)) {
            best = std::move(sorted);
            best_weight = chosen_weight;
            found = true;
        }
    }

    void dfs() {
        if (++nodes > options.max_nodes)
            throw ResourceLimitError("dirmc solver exceeded " +
                                     std::to_string(options.max_nodes) + " search nodes");

        std::vector<int> path = shortest_uncut(deleted);
        if (path.empty()) {
            record_solution();
            return;
        }

        long long limit = std::min(inst.budget, best_weight);
        long long bound = packing_bound();
        if (bound < 0 || chosen_weight + bound > limit) return;

        std::vector<int> candidates;
        for (std::size_t idx = 1; idx + 1 < path.size(); ++idx) {
            int v = path[idx];
            if (can_delete[static_cast<std::size_t>(v)] && !banned[static_cast<std::size_t>(v)])
                candidates.push_back(v);
        }
        // Every completion must delete an internal vertex of this path that
        // is still allowed here, so the candidates partition the subtree.
        for (int v : candidates) {
            mask_set(deleted, v);
            chosen.push_back(v);
            chosen_weight += inst.weight[static_cast<std::size_t>(v)];
            dfs();
            chosen_weight -= inst.weight[static_cast<std::size_t>(v)];
            chosen.pop_back();
            mask_clear(deleted, v);
            banned[static_cast<std::size_t>(v)] = 1;
        }
        for (int v : candidates) banned[static_cast<std::size_t>(v)] = 0;
    }
};

}  // namespace

std::optional<Cutset> solve_dirmc_exact(const DirMcInstance& inst,
                                        const DirMcSolveOptions& options) {
    validate_dirmc(inst);
    ExactSolver solver(inst, options);
    solver.dfs();
    if (!solver.found) return std::nullopt;
    return Cutset{std::move(solver.best)};
}

std::optional<Cutset> solve_dirmc_exhaustive(const DirMcInstance& inst, int max_deletable) {
    validate_dirmc(inst);
    std::vector<bool> terminal = inst.terminal_mask();
    std::vector<int> deletable;
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        if (!terminal[static_cast<std::size_t>(v)] &&
            inst.weight[static_cast<std::size_t>(v)] <= inst.budget)
            deletable.push_back(v);
    int d = static_cast<int>(deletable.size());
    if (d > max_deletable || d > 62)
        throw ResourceLimitError("dirmc exhaustive solver: " + std::to_string(d) +
                                 " deletable vertices exceed the limit of " +
                                 std::to_string(std::min(max_deletable, 62)));

    BitAdjacency adj(inst.graph.vertex_count());
    for (const Arc& arc : inst.graph.arcs()) adj.add(arc.first, arc.second);
    BitAdjacency::Scratch scratch;
    std::vector<std::uint64_t> blocked(static_cast<std::size_t>(adj.words), 0);

    bool found = false;
    long long best_weight = 0;
    std::vector<int> best;
    for (std::uint64_t mask = 0; mask < (1ULL << d); ++mask) {
        long long weight = 0;
        for (int bit = 0; bit < d; ++bit)
            if (mask >> bit & 1)
                weight += inst.weight[static_cast<std::size_t>(deletable[
                    static_cast<std::size_t>(bit)])];
        if (weight > inst.budget) continue;
        if (found && weight > best_weight) continue;

        std::fill(blocked.begin(), blocked.end(), 0);
        std::vector<int> vertices;
        for (int bit = 0; bit < d; ++bit)
            if (mask >> bit & 1) {
                vertices.push_back(deletable[static_cast<std::size_t>(bit)]);
                mask_set(blocked, deletable[static_cast<std::size_t>(bit)]);
            }
        bool cuts = true;
        for (const Arc& pair : inst.terminal_pairs)
            if (adj.reaches(pair.first, pair.second, blocked.data(), scratch)) {
                cuts = false;
                break;
            }
        if (!cuts) continue;
        if (!found || weight < best_weight || (weight == best_weight && vertices < best)) {
            found = true;
            best_weight = weight;
            best = std::move(vertices);
        }
    }
    if (!found) return std::nullopt;
    return Cutset{std::move(best)};
}

WeightExpansion expand_weights(const DirMcInstance& inst) {
    validate_dirmc(inst);
    std::vector<bool> terminal = inst.terminal_mask();

    WeightExpansion out;
    out.instance.budget = inst.budget;
    out.instance.gadget_m = 0;

    std::vector<std::vector<int>> copies(static_cast<std::size_t>(inst.graph.vertex_count()));
    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        long long count = terminal[static_cast<std::size_t>(v)]
                              ? 1
                              : inst.weight[static_cast<std::size_t>(v)];
        for (long long c = 0; c < count; ++c) {
            std::string label = inst.graph.label(v);
            if (count > 1) label += "#" + std::to_string(c);
            int id = out.instance.graph.add_vertex(std::move(label));
            copies[static_cast<std::size_t>(v)].push_back(id);
            out.instance.weight.push_back(terminal[static_cast<std::size_t>(v)] ? 0 : 1);
            out.twin_to_original.push_back(v);
        }
    }
    for (const Arc& arc : inst.graph.arcs())
        for (int u : copies[static_cast<std::size_t>(arc.first)])
            for (int v : copies[static_cast<std::size_t>(arc.second)])
                out.instance.graph.add_arc_once(u, v);
    for (const Arc& pair : inst.terminal_pairs)
        out.instance.terminal_pairs.emplace_back(
            copies[static_cast<std::size_t>(pair.first)].front(),
            copies[static_cast<std::size_t>(pair.second)].front());

    validate_dirmc(out.instance);
    return out;
}

// ---------------------------------------------------------------------------
// Reduction.
// ---------------------------------------------------------------------------

namespace {

std::string pair_tag(const char* role, int i, int j) {
    return std::string(role) + ":" + std::to_string(i) + ":" + std::to_string(j);
}

// One bidirected path of 2n+1 vertices; returns plain ids by position 0..n
// and hat ids by position 1..n (at index a-1).
struct EmittedPath {
    std::vector<int> plain, hat;
};

EmittedPath emit_bidirected_path(Digraph& g, std::vector<long long>& weight, int n,
                                 const std::string& tag, const std::string& hat_tag,
                                 long long plain_weight, long long hat_weight) {
    EmittedPath path;
    path.plain.push_back(g.add_vertex(tag + ":0"));
    weight.push_back(plain_weight);
    for (int a = 1; a <= n; ++a) {
        path.hat.push_back(g.add_vertex(hat_tag + ":" + std::to_string(a)));
        weight.push_back(hat_weight);
        path.plain.push_back(g.add_vertex(tag + ":" + std::to_string(a)));
        weight.push_back(plain_weight);
        int prev_plain = path.plain[static_cast<std::size_t>(a - 1)];
        int hat = path.hat[static_cast<std::size_t>(a - 1)];
        int cur_plain = path.plain[static_cast<std::size_t>(a)];
        g.add_arc(prev_plain, hat);
        g.add_arc(hat, prev_plain);
        g.add_arc(hat, cur_plain);
        g.add_arc(cur_plain, hat);
    }
    return path;
}

}  // namespace

DirMcInstance reduce_psi_to_dirmc(const PsiInstance& source, int gadget_m) {
    validate_psi(source);
    if (!is_normalized(source))
        throw InputError("reduce_psi_to_dirmc: instance must be normalized first");
    if (gadget_m < 2) throw InputError("reduce_psi_to_dirmc: heaviness constant must be >= 2");

    const int n = source.class_size;
    const int ell = source.pattern_vertex_count;
    const long long k = source.pattern_edge_count();
    const long long budget = (6LL * gadget_m + 1) * k;
    const long long undeletable = budget + 1;

    DirMcInstance out;
    out.budget = budget;
    out.gadget_m = gadget_m;
    Digraph& g = out.graph;
    std::vector<long long>& weight = out.weight;

    // Ordered pairs, grouped by pattern edge: (i, j) then (j, i).
    std::vector<Arc> ordered_pairs;
    for (const Arc& e : source.pattern_edges) {
        ordered_pairs.emplace_back(e.first, e.second);
        ordered_pairs.emplace_back(e.second, e.first);
    }

    // Vertices are laid out so that ids increase along every arc except the
    // backward halves of the bidirected paths, which step back by exactly
    // one.  Consecutive-pair bags over this order then form a width-2
    // directed path decomposition.
    int s_x = g.add_vertex("sx");
    int s_y = g.add_vertex("sy");
    int s_lt = g.add_vertex("slt");
    int s_gt = g.add_vertex("sgt");
    weight.insert(weight.end(), 4, 0);

    std::map<Arc, EmittedPath> x_paths;
    for (const Arc& pr : ordered_pairs)
        x_paths[pr] = emit_bidirected_path(g, weight, n, pair_tag("x", pr.first, pr.second),
                                           pair_tag("xh", pr.first, pr.second), undeletable,
                                           gadget_m);

    std::map<int, EmittedPath> z_paths;
    for (int i = 1; i <= ell; ++i)
        z_paths[i] = emit_bidirected_path(g, weight, n, "z:" + std::to_string(i),
                                          "zh:" + std::to_string(i), undeletable,
                                          static_cast<long long>(gadget_m) *
                                              source.pattern_degree(i));

    std::map<Arc, std::vector<std::vector<int>>> grids;
    for (const Arc& e : source.pattern_edges) {
        auto& grid = grids[e];
        grid.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                grid[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
                    g.add_vertex(pair_tag("p", e.first, e.second) + ":" + std::to_string(a) +
                                 ":" + std::to_string(b));
                bool host_edge =
                    source.has_host_edge(source.member(e.first, a), source.member(e.second, b));
                weight.push_back(host_edge ? 1 : undeletable);
            }
    }

    std::map<Arc, EmittedPath> y_paths;
    for (const Arc& pr : ordered_pairs)
        y_paths[pr] = emit_bidirected_path(g, weight, n, pair_tag("y", pr.first, pr.second),
                                           pair_tag("yh", pr.first, pr.second), undeletable,
                                           gadget_m);

    int t_x = g.add_vertex("tx");
    int t_y = g.add_vertex("ty");
    int t_lt = g.add_vertex("tlt");
    int t_gt = g.add_vertex("tgt");
    weight.insert(weight.end(), 4, 0);

    // Transfer paths feed the assignment paths and drain into the out paths.
    for (const Arc& pr : ordered_pairs) {
        const EmittedPath& x = x_paths[pr];
        const EmittedPath& y = y_paths[pr];
        const EmittedPath& z = z_paths[pr.first];
        for (int a = 0; a <= n; ++a) {
            g.add_arc(x.plain[static_cast<std::size_t>(a)], z.plain[static_cast<std::size_t>(a)]);
            g.add_arc(z.plain[static_cast<std::size_t>(a)], y.plain[static_cast<std::size_t>(a)]);
        }
        g.add_arc(s_x, x.plain.front());
        g.add_arc(y.plain.back(), t_y);
        g.add_arc(pr.first < pr.second ? s_lt : s_gt, x.plain.back());
        g.add_arc(y.plain.front(), pr.first < pr.second ? t_lt : t_gt);
    }
    for (int i = 1; i <= ell; ++i) {
        g.add_arc(s_y, z_paths[i].plain.front());
        g.add_arc(z_paths[i].plain.back(), t_x);
    }

    // Each grid checks one pattern edge: row a is entered from the forward
    // pair's position a and exits one position lower; columns play the same
    // role for the reversed pair.
    for (const Arc& e : source.pattern_edges) {
        const auto& grid = grids[e];
        auto cell = [&](int a, int b) {
            return grid[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
        };
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a < n) g.add_arc(cell(a, b), cell(a + 1, b));
                if (b < n) g.add_arc(cell(a, b), cell(a, b + 1));
            }
        const EmittedPath& x_fwd = x_paths[e];
        const EmittedPath& y_fwd = y_paths[e];
        const EmittedPath& x_rev = x_paths[Arc{e.second, e.first}];
        const EmittedPath& y_rev = y_paths[Arc{e.second, e.first}];
        for (int a = 1; a <= n; ++a) {
            g.add_arc(x_fwd.plain[static_cast<std::size_t>(a)], cell(a, 1));
            g.add_arc(cell(a, n), y_fwd.plain[static_cast<std::size_t>(a - 1)]);
            g.add_arc(x_rev.plain[static_cast<std::size_t>(a)], cell(1, a));
            g.add_arc(cell(n, a), y_rev.plain[static_cast<std::size_t>(a - 1)]);
        }
    }

    out.terminal_pairs = {Arc{s_x, t_x}, Arc{s_y, t_y}, Arc{s_lt, t_lt}, Arc{s_gt, t_gt}};
    validate_dirmc(out);
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
        throw InputError("dirmc layout: bad number in label '" + label + "'");
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw InputError("dirmc layout: bad number in label '" + label + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

// Sparse position -> vertex maps accumulated while scanning labels, compacted
// into dense vectors once the layout dimensions are known.
using PosMap = std::map<int, int>;

void insert_pos(PosMap& m, int pos, int v, const std::string& label) {
    if (!m.emplace(pos, v).second) throw InputError("dirmc layout: duplicate label '" + label + "'");
}

std::vector<int> compact_positions(const PosMap& m, int lo, int hi, const std::string& what) {
    std::vector<int> out;
    for (int pos = lo; pos <= hi; ++pos) {
        auto it = m.find(pos);
        if (it == m.end())
            throw InputError("dirmc layout: " + what + " is missing position " +
                             std::to_string(pos));
        out.push_back(it->second);
    }
    if (static_cast<int>(m.size()) != hi - lo + 1)
        throw InputError("dirmc layout: " + what + " has a position outside " +
                         std::to_string(lo) + ".." + std::to_string(hi));
    return out;
}

}  // namespace

DirMcLayout DirMcLayout::from_labels(const DirMcInstance& inst) {
    validate_dirmc(inst);
    DirMcLayout layout;
    std::map<int, PosMap> z_plain_pos, z_hat_pos;
    std::map<Arc, PosMap> x_plain_pos, x_hat_pos, y_plain_pos, y_hat_pos;
    std::map<Arc, std::map<Arc, int>> grid_pos;

    auto set_terminal = [](int& slot, int v, const std::string& label) {
        if (slot != -1) throw InputError("dirmc layout: duplicate label '" + label + "'");
        slot = v;
    };

    for (int v = 0; v < inst.graph.vertex_count(); ++v) {
        const std::string& label = inst.graph.label(v);
        std::vector<std::string> parts = split_label(label);
        const std::string& role = parts[0];
        auto bad = [&]() -> InputError {
            return InputError("dirmc layout: unrecognized label '" + label + "'");
        };
        if (parts.size() == 1) {
            if (role == "sx") set_terminal(layout.s_x, v, label);
            else if (role == "sy") set_terminal(layout.s_y, v, label);
            else if (role == "slt") set_terminal(layout.s_lt, v, label);
            else if (role == "sgt") set_terminal(layout.s_gt, v, label);
            else if (role == "tx") set_terminal(layout.t_x, v, label);
            else if (role == "ty") set_terminal(layout.t_y, v, label);
            else if (role == "tlt") set_terminal(layout.t_lt, v, label);
            else if (role == "tgt") set_terminal(layout.t_gt, v, label);
            else throw bad();
        } else if (parts.size() == 3 && (role == "z" || role == "zh")) {
            int i = parse_label_int(parts[1], label);
            int a = parse_label_int(parts[2], label);
            insert_pos(role == "z" ? z_plain_pos[i] : z_hat_pos[i], a, v, label);
        } else if (parts.size() == 4 &&
                   (role == "x" || role == "xh" || role == "y" || role == "yh")) {
            int i = parse_label_int(parts[1], label);
            int j = parse_label_int(parts[2], label);
            int a = parse_label_int(parts[3], label);
            if (i == j) throw bad();
            Arc key{i, j};
            PosMap& m = role == "x"    ? x_plain_pos[key]
                        : role == "xh" ? x_hat_pos[key]
                        : role == "y"  ? y_plain_pos[key]
                                       : y_hat_pos[key];
            insert_pos(m, a, v, label);
        } else if (parts.size() == 5 && role == "p") {
            int i = parse_label_int(parts[1], label);
            int j = parse_label_int(parts[2], label);
            int a = parse_label_int(parts[3], label);
            int b = parse_label_int(parts[4], label);
            if (i >= j) throw bad();
            if (!grid_pos[Arc{i, j}].emplace(Arc{a, b}, v).second)
                throw InputError("dirmc layout: duplicate label '" + label + "'");
        } else {
            throw bad();
        }
    }

    for (int* slot : {&layout.s_x, &layout.t_x, &layout.s_y, &layout.t_y, &layout.s_lt,
                      &layout.t_lt, &layout.s_gt, &layout.t_gt})
        if (*slot == -1) throw InputError("dirmc layout: a terminal label is missing");

    // Pattern shape: edges from the grids, vertices 1..ell from the
    // assignment paths, each vertex on at least one edge.
    for (const auto& [edge, cells] : grid_pos) layout.pattern_edges.push_back(edge);
    layout.ell = z_plain_pos.empty() ? 0 : z_plain_pos.rbegin()->first;
    for (const auto& [edge, cells] : grid_pos)
        if (edge.first < 1 || edge.second > layout.ell)
            throw InputError("dirmc layout: grid for a pattern edge outside 1.." +
                             std::to_string(layout.ell));
    std::vector<int> degree(static_cast<std::size_t>(layout.ell) + 1, 0);
    for (const Arc& e : layout.pattern_edges) {
        ++degree[static_cast<std::size_t>(e.first)];
        ++degree[static_cast<std::size_t>(e.second)];
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
        for (const auto* m : {&x_plain_pos, &y_plain_pos})
            if (keys_of(*m) != expected_pairs)
                throw InputError(
                    "dirmc layout: transfer paths do not match the grids' pattern edges");
    }
    for (int i = 1; i <= layout.ell; ++i) {
        if (!z_plain_pos.count(i))
            throw InputError("dirmc layout: missing assignment path for pattern vertex " +
                             std::to_string(i));
        if (degree[static_cast<std::size_t>(i)] == 0)
            throw InputError("dirmc layout: pattern vertex " + std::to_string(i) +
                             " is on no pattern edge");
    }
    if (static_cast<int>(z_plain_pos.size()) != layout.ell)
        throw InputError("dirmc layout: assignment path numbered outside 1.." +
                         std::to_string(layout.ell));

    // Dimension n from the first assignment path (0..n plains), then compact
    // everything to dense vectors, which validates the shared dimension.
    layout.n = z_plain_pos.empty() ? 0 : z_plain_pos.begin()->second.rbegin()->first;
    if (layout.ell > 0 && layout.n < 1)
        throw InputError("dirmc layout: class size must be at least 1");
    const int n = layout.n;
    for (int i = 1; i <= layout.ell; ++i) {
        std::string what = "assignment path " + std::to_string(i);
        layout.z_plain[i] = compact_positions(z_plain_pos[i], 0, n, what);
        layout.z_hat[i] = compact_positions(z_hat_pos[i], 1, n, what + " (hats)");
    }
    for (const auto& [key, m] : x_plain_pos) {
        std::string what = "transfer path " + pair_tag("x", key.first, key.second);
        layout.x_plain[key] = compact_positions(m, 0, n, what);
        layout.x_hat[key] = compact_positions(x_hat_pos[key], 1, n, what + " (hats)");
    }
    for (const auto& [key, m] : y_plain_pos) {
        std::string what = "transfer path " + pair_tag("y", key.first, key.second);
        layout.y_plain[key] = compact_positions(m, 0, n, what);
        layout.y_hat[key] = compact_positions(y_hat_pos[key], 1, n, what + " (hats)");
    }
    // Compacting indexed the hat maps by every plain key, so a size mismatch
    // now means hats exist for a path that has no plain vertices.
    if (x_hat_pos.size() != x_plain_pos.size() || y_hat_pos.size() != y_plain_pos.size() ||
        static_cast<int>(z_hat_pos.size()) != layout.ell)
        throw InputError("dirmc layout: hat vertices for a nonexistent path");
    for (const auto& [edge, cells] : grid_pos) {
        auto& grid = layout.grid[edge];
        grid.assign(static_cast<std::size_t>(n), {});
        for (int a = 1; a <= n; ++a) {
            PosMap row;
            for (const auto& [cell, v] : cells)
                if (cell.first == a) row[cell.second] = v;
            grid[static_cast<std::size_t>(a - 1)] = compact_positions(
                row, 1, n, "grid row " + std::to_string(a) + " of " +
                               pair_tag("p", edge.first, edge.second));
        }
        if (static_cast<int>(cells.size()) != n * n)
            throw InputError("dirmc layout: grid " + pair_tag("p", edge.first, edge.second) +
                             " is not " + std::to_string(n) + "x" + std::to_string(n));
    }

    // Weight audit; the heaviness constant is read off the transfer hats.
    const long long k = static_cast<long long>(layout.pattern_edges.size());
    if (k > 0) {
        long long m_weight = inst.weight[static_cast<std::size_t>(
            layout.x_hat.begin()->second.front())];
        if (m_weight < 2 || m_weight > 1'000'000'000 || (6 * m_weight + 1) * k != inst.budget)
            throw InputError("dirmc layout: budget does not match the transfer-hat weight");
        layout.gadget_m = static_cast<int>(m_weight);
    } else if (inst.budget != 0) {
        throw InputError("dirmc layout: positive budget but no pattern edges");
    }
    const long long undeletable = inst.budget + 1;
    auto expect_weight = [&](int v, long long w, const char* what) {
        if (inst.weight[static_cast<std::size_t>(v)] != w)
            throw InputError(std::string("dirmc layout: ") + what + " '" + inst.graph.label(v) +
                             "' has weight " +
                             std::to_string(inst.weight[static_cast<std::size_t>(v)]) +
                             ", expected " + std::to_string(w));
    };
    for (const auto& [i, ids] : layout.z_plain)
        for (int v : ids) expect_weight(v, undeletable, "path vertex");
    for (const auto* paths : {&layout.x_plain, &layout.y_plain})
        for (const auto& [key, ids] : *paths)
            for (int v : ids) expect_weight(v, undeletable, "path vertex");
    for (const auto& [i, ids] : layout.z_hat)
        for (int v : ids)
            expect_weight(v, static_cast<long long>(layout.gadget_m) *
                                 degree[static_cast<std::size_t>(i)],
                          "assignment hat");
    for (const auto* paths : {&layout.x_hat, &layout.y_hat})
        for (const auto& [key, ids] : *paths)
            for (int v : ids) expect_weight(v, layout.gadget_m, "transfer hat");
    for (const auto& [edge, grid] : layout.grid)
        for (const auto& row : grid)
            for (int v : row) {
                long long w = inst.weight[static_cast<std::size_t>(v)];
                if (w != 1 && w != undeletable)
                    throw InputError("dirmc layout: grid cell '" + inst.graph.label(v) +
                                     "' is neither light nor undeletable");
            }

    if (inst.terminal_pairs != std::vector<Arc>{Arc{layout.s_x, layout.t_x},
                                                Arc{layout.s_y, layout.t_y},
                                                Arc{layout.s_lt, layout.t_lt},
                                                Arc{layout.s_gt, layout.t_gt}})
        throw InputError("dirmc layout: terminal pairs are not the four canonical pairs");
    return layout;
}

namespace {

void check_layout_matches_source(const DirMcLayout& layout, const PsiInstance& source,
                                 const char* who) {
    if (layout.ell != source.pattern_vertex_count ||
        layout.pattern_edges != source.pattern_edges ||
        (layout.ell > 0 && layout.n != source.class_size))
        throw InputError(std::string(who) +
                         ": the reduced instance does not match the source instance shape");
}

}  // namespace

Cutset lift_hom_to_cutset(const PsiInstance& source, const Homomorphism& h,
                          const DirMcInstance& reduced) {
    validate_psi(source);
    if (!is_partitioned_homomorphism(source, h))
        throw InputError("lift_hom_to_cutset: the assignment is not a valid embedding");
    DirMcLayout layout = DirMcLayout::from_labels(reduced);
    check_layout_matches_source(layout, source, "lift_hom_to_cutset");

    auto image = [&](int i) { return h.image[static_cast<std::size_t>(i - 1)]; };
    Cutset cut;
    for (const auto& [key, hats] : layout.x_hat)
        cut.vertices.push_back(hats[static_cast<std::size_t>(image(key.first) - 1)]);
    for (const auto& [key, hats] : layout.y_hat)
        cut.vertices.push_back(hats[static_cast<std::size_t>(image(key.first) - 1)]);
    for (const auto& [i, hats] : layout.z_hat)
        cut.vertices.push_back(hats[static_cast<std::size_t>(image(i) - 1)]);
    for (const auto& [edge, grid] : layout.grid)
        cut.vertices.push_back(grid[static_cast<std::size_t>(image(edge.first) - 1)]
                                   [static_cast<std::size_t>(image(edge.second) - 1)]);
    std::sort(cut.vertices.begin(), cut.vertices.end());

    if (cutset_weight(reduced, cut) != reduced.budget)
        throw ContractViolation(
            "lift_hom_to_cutset: the lifted cutset does not have the canonical weight; the "
            "reduced instance was not produced from this source instance");
    return cut;
}

Homomorphism extract_hom_from_cutset(const DirMcInstance& reduced, const Cutset& cut,
                                     const PsiInstance& source) {
    validate_psi(source);
    DirMcLayout layout = DirMcLayout::from_labels(reduced);
    check_layout_matches_source(layout, source, "extract_hom_from_cutset");
    check_cutset_members(reduced, cut);

    auto selected = [&](int v) {
        return std::binary_search(cut.vertices.begin(), cut.vertices.end(), v);
    };
    Homomorphism h;
    for (int i = 1; i <= layout.ell; ++i) {
        const std::vector<int>& hats = layout.z_hat.at(i);
        int position = 0;
        for (int a = 1; a <= layout.n; ++a)
            if (selected(hats[static_cast<std::size_t>(a - 1)])) {
                if (position != 0)
                    throw ContractViolation(
                        "extract_hom_from_cutset: assignment path " + std::to_string(i) +
                        " has more than one selected hat");
                position = a;
            }
        if (position == 0)
            throw ContractViolation("extract_hom_from_cutset: assignment path " +
                                    std::to_string(i) + " has no selected hat");
        h.image.push_back(position);
    }
    if (!is_partitioned_homomorphism(source, h))
        throw ContractViolation(
            "extract_hom_from_cutset: the extracted assignment is not a valid embedding");
    return h;
}

// ---------------------------------------------------------------------------
// Directed path decompositions.
// ---------------------------------------------------------------------------

PathDecompositionCheck validate_path_decomposition(const Digraph& g,
                                                   const DirectedPathDecomposition& d) {
    const int bags = static_cast<int>(d.bags.size());
    std::vector<int> first(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> last(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> count(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int b = 0; b < bags; ++b) {
        std::vector<int> bag = d.bags[static_cast<std::size_t>(b)];
        std::sort(bag.begin(), bag.end());
        if (std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw InputError("path decomposition: bag " + std::to_string(b) +
                             " lists a vertex twice");
        for (int v : bag) {
            g.check_vertex(v, "path decomposition bag entry");
            if (first[static_cast<std::size_t>(v)] == -1) first[static_cast<std::size_t>(v)] = b;
            last[static_cast<std::size_t>(v)] = b;
            ++count[static_cast<std::size_t>(v)];
        }
    }

    PathDecompositionCheck check;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (count[static_cast<std::size_t>(v)] == 0) {
            check.violation = "vertex " + std::to_string(v) + " is in no bag";
            return check;
        }
        if (count[static_cast<std::size_t>(v)] !=
            last[static_cast<std::size_t>(v)] - first[static_cast<std::size_t>(v)] + 1) {
            check.violation = "vertex " + std::to_string(v) + " does not occupy a contiguous run";
            return check;
        }
    }
    for (const Arc& arc : g.arcs()) {
        if (first[static_cast<std::size_t>(arc.first)] > last[static_cast<std::size_t>(arc.second)]) {
            check.violation = "arc (" + std::to_string(arc.first) + ", " +
                              std::to_string(arc.second) + ") never points forward";
            return check;
        }
    }
    check.valid = true;
    for (const auto& bag : d.bags) check.width = std::max(check.width, static_cast<int>(bag.size()));
    return check;
}

DirectedPathDecomposition build_pathwidth2_decomposition(const DirMcInstance& reduced) {
    DirectedPathDecomposition d;
    const int v = reduced.graph.vertex_count();
    if (v == 1) d.bags.push_back({0});
    for (int i = 0; i + 1 < v; ++i) d.bags.push_back({i, i + 1});
    PathDecompositionCheck check = validate_path_decomposition(reduced.graph, d);
    if (!check.valid)
        throw ContractViolation(
            "build_pathwidth2_decomposition: the instance's vertex order does not support "
            "consecutive-pair bags (" + check.violation + ")");
    return d;
}

}  // namespace dircuts
