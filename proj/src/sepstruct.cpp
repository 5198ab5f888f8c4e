#include "dircuts/sepstruct.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "dircuts/errors.hpp"
#include "dircuts/flow.hpp"

namespace dircuts {

namespace {

bool mask_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) return false;
    }
    return true;
}

int count_parallel(const Digraph& g, int u, int v) {
    int copies = 0;
    for (int id : g.out_arc_ids(u)) {
        if (g.arc(id).second == v) ++copies;
    }
    return copies;
}

// Unique pairs of `pairs`, each expanded to its multiplicity in g.  Errors on
// arcs the graph does not have.
ArcSet canonical_cut(const Digraph& g, const ArcSet& pairs, const char* what) {
    ArcSet unique = as_arc_set(pairs);
    ArcSet out;
    for (const Arc& a : unique) {
        g.check_vertex(a.first, what);
        g.check_vertex(a.second, what);
        int copies = count_parallel(g, a.first, a.second);
        if (copies == 0)
            throw InputError(std::string(what) + ": arc (" + std::to_string(a.first) + ", " +
                             std::to_string(a.second) + ") is not in the graph");
        for (int c = 0; c < copies; ++c) out.push_back(a);
    }
    return out;
}

struct CutInspection {
    bool is_cut = false;
    bool minimal = false;          // meaningful only when is_cut
    std::vector<bool> reach;       // from s in g - C
    std::vector<bool> coreach;     // to t in g - C
};

// `rev` must be reverse_graph(g); arc ids agree between the two, so one
// removal mask serves both directions.
CutInspection inspect_cut(const Digraph& g, const Digraph& rev, int s, int t,
                          const std::vector<bool>& removed_arcs, const ArcSet& pairs) {
    CutInspection out;
    int src[1] = {s};
    int snk[1] = {t};
    out.reach = reach_mask(g, src, nullptr, &removed_arcs);
    out.coreach = reach_mask(rev, snk, nullptr, &removed_arcs);
    out.is_cut = !out.reach[static_cast<std::size_t>(t)];
    if (!out.is_cut) return out;
    out.minimal = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0 && pairs[i] == pairs[i - 1]) continue;  // one check per parallel class
        if (!out.reach[static_cast<std::size_t>(pairs[i].first)] ||
            !out.coreach[static_cast<std::size_t>(pairs[i].second)]) {
            out.minimal = false;
            break;
        }
    }
    return out;
}

std::uint64_t pow4(int k) {
    std::uint64_t out = 1;
    for (int i = 0; i < k && out < (1ULL << 62); ++i) out *= 4;
    return out;
}

}  // namespace

void validate_cut_context(const CutContext& ctx) {
    ctx.graph.check_vertex(ctx.s, "cut context source");
    ctx.graph.check_vertex(ctx.t, "cut context sink");
    if (ctx.s == ctx.t) throw InputError("cut context needs distinct source and sink");
    if (ctx.k < 0) throw InputError("cut-size cap must be nonnegative");
}

CutContext make_cut_context(Digraph graph, int s, int t, int k) {
    CutContext ctx{std::move(graph), s, t, k};
    validate_cut_context(ctx);
    return ctx;
}

std::vector<ArcSet> enum_minimal_cuts(const CutContext& ctx, const SepLimits& limits) {
    validate_cut_context(ctx);
    const Digraph& g = ctx.graph;
    std::vector<int> free_vertices;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != ctx.s && v != ctx.t) free_vertices.push_back(v);
    }
    if (static_cast<int>(free_vertices.size()) > limits.max_free_vertices)
        throw ResourceLimitError("minimal-cut enumeration limited to " +
                                 std::to_string(limits.max_free_vertices) +
                                 " non-terminal vertices, got " +
                                 std::to_string(free_vertices.size()));

    Digraph rev = reverse_graph(g);
    std::set<ArcSet> found;
    std::vector<bool> in_side(static_cast<std::size_t>(g.vertex_count()));
    for (std::uint64_t mask = 0; mask < (1ULL << free_vertices.size()); ++mask) {
        std::fill(in_side.begin(), in_side.end(), false);
        in_side[static_cast<std::size_t>(ctx.s)] = true;
        for (std::size_t i = 0; i < free_vertices.size(); ++i) {
            if (mask >> i & 1) in_side[static_cast<std::size_t>(free_vertices[i])] = true;
        }
        // Arc boundary of the side; every copy of a parallel arc counts.
        ArcSet boundary;
        std::vector<bool> removed(static_cast<std::size_t>(g.arc_count()), false);
        bool too_big = false;
        for (int id = 0; id < g.arc_count(); ++id) {
            Arc a = g.arc(id);
            if (in_side[static_cast<std::size_t>(a.first)] &&
                !in_side[static_cast<std::size_t>(a.second)]) {
                if (static_cast<int>(boundary.size()) == ctx.k) {
                    too_big = true;
                    break;
                }
                boundary.push_back(a);
                removed[static_cast<std::size_t>(id)] = true;
            }
        }
        if (too_big) continue;
        std::sort(boundary.begin(), boundary.end());
        if (found.count(boundary)) continue;
        CutInspection info = inspect_cut(g, rev, ctx.s, ctx.t, removed, boundary);
        if (info.is_cut && info.minimal) found.insert(boundary);
    }
    return {found.begin(), found.end()};
}

bool is_important_separator(const CutContext& ctx, const ArcSet& C, const SepLimits& limits) {
    validate_cut_context(ctx);
    const Digraph& g = ctx.graph;
    ArcSet canon = canonical_cut(g, C, "separator");
    if (static_cast<int>(canon.size()) > ctx.k)
        throw InputError("separator has " + std::to_string(canon.size()) +
                         " arcs, more than the cap " + std::to_string(ctx.k));

    Digraph rev = reverse_graph(g);
    CutInspection info = inspect_cut(g, rev, ctx.s, ctx.t, arc_id_mask(g, canon), canon);
    if (!info.is_cut || !info.minimal) return false;

    // Exhaustively scan candidate arc-id subsets no larger than |C| for a
    // different cut keeping at least as much reachable from s.
    const std::size_t m = static_cast<std::size_t>(g.arc_count());
    const std::size_t max_size = canon.size();
    std::uint64_t budget = limits.max_subsets;
    bool dominated_weak = false;    // some other cut with reach superset-or-equal
    bool dominated_strict = false;  // some cut with strictly larger reach
    int src[1] = {ctx.s};
    std::vector<int> comb;
    std::vector<bool> removed(m, false);
    for (std::size_t size = 1; size <= max_size && !(dominated_weak && dominated_strict); ++size) {
        if (size > m) break;
        comb.assign(size, 0);
        for (std::size_t i = 0; i < size; ++i) comb[i] = static_cast<int>(i);
        while (true) {
            if (budget-- == 0)
                throw ResourceLimitError("importance check exceeded the subset budget");
            std::fill(removed.begin(), removed.end(), false);
            ArcSet pairs;
            for (int id : comb) {
                removed[static_cast<std::size_t>(id)] = true;
                pairs.push_back(g.arc(id));
            }
            std::sort(pairs.begin(), pairs.end());
            std::vector<bool> reach = reach_mask(g, src, nullptr, &removed);
            if (!reach[static_cast<std::size_t>(ctx.t)] && mask_subset(info.reach, reach)) {
                if (pairs != canon) dominated_weak = true;
                if (reach != info.reach) dominated_strict = true;
                if (dominated_weak && dominated_strict) break;
            }
            // next combination
            std::size_t i = size;
            while (i > 0 && comb[i - 1] == static_cast<int>(m - size + i - 1)) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    if (dominated_weak != dominated_strict)
        throw ContractViolation(
            "importance formulations disagree: dominated by an equal-reach cut but not strictly");
    return !dominated_weak;
}

namespace {

void enum_important_rec(const Digraph& g, int t, std::vector<bool> removed,
                        std::vector<bool> sources, ArcSet committed, int budget, int depth,
                        int depth_cap, std::set<ArcSet>& out) {
    if (depth > depth_cap)
        throw ContractViolation("separator branching exceeded its depth bound");
    Digraph filtered(g.vertex_count());
    for (int id = 0; id < g.arc_count(); ++id) {
        if (!removed[static_cast<std::size_t>(id)]) {
            Arc a = g.arc(id);
            filtered.add_arc(a.first, a.second);
        }
    }
    std::vector<int> source_list;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (sources[static_cast<std::size_t>(v)]) source_list.push_back(v);
    }
    SourceSetCut cut = min_arc_cut_from_set(filtered, source_list, t, budget);
    if (cut.value > budget) return;
    if (cut.value == 0) {
        std::sort(committed.begin(), committed.end());
        out.insert(committed);
        return;
    }
    ArcSet boundary = cut.cut;
    std::sort(boundary.begin(), boundary.end());
    Arc branch = boundary.front();
    int copies = count_parallel(filtered, branch.first, branch.second);

    // Branch 1: the whole parallel class joins the separator.
    if (budget - copies >= 0) {
        std::vector<bool> removed_in = removed;
        for (int id = 0; id < g.arc_count(); ++id) {
            if (!removed[static_cast<std::size_t>(id)] && g.arc(id) == branch)
                removed_in[static_cast<std::size_t>(id)] = true;
        }
        ArcSet committed_in = committed;
        for (int c = 0; c < copies; ++c) committed_in.push_back(branch);
        enum_important_rec(g, t, std::move(removed_in), sources, std::move(committed_in),
                           budget - copies, depth + 1, depth_cap, out);
    }
    // Branch 2: the head moves to the source side.
    if (branch.second != t) {
        std::vector<bool> sources_ab = sources;
        sources_ab[static_cast<std::size_t>(branch.second)] = true;
        enum_important_rec(g, t, std::move(removed), std::move(sources_ab), std::move(committed),
                           budget, depth + 1, depth_cap, out);
    }
}

}  // namespace

std::vector<ArcSet> enum_important_separators(const CutContext& ctx) {
    validate_cut_context(ctx);
    const Digraph& g = ctx.graph;
    std::set<ArcSet> candidates;
    std::vector<bool> removed(static_cast<std::size_t>(g.arc_count()), false);
    std::vector<bool> sources(static_cast<std::size_t>(g.vertex_count()), false);
    sources[static_cast<std::size_t>(ctx.s)] = true;
    enum_important_rec(g, ctx.t, removed, sources, {}, ctx.k, 0, 2 * ctx.k + 6, candidates);

    // Keep the inclusion-minimal cuts not dominated by another candidate.
    // Every important separator is among the candidates, and a dominated cut
    // is always dominated by an important one, so pairwise filtering suffices.
    Digraph rev = reverse_graph(g);
    std::vector<ArcSet> minimal;
    std::vector<std::vector<bool>> reaches;
    for (const ArcSet& cand : candidates) {
        CutInspection info = inspect_cut(g, rev, ctx.s, ctx.t, arc_id_mask(g, cand), cand);
        if (info.is_cut && info.minimal) {
            minimal.push_back(cand);
            reaches.push_back(info.reach);
        }
    }
    std::vector<ArcSet> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < minimal.size() && !dominated; ++j) {
            if (j != i && minimal[j].size() <= minimal[i].size() &&
                mask_subset(reaches[i], reaches[j]))
                dominated = true;
        }
        if (!dominated) out.push_back(minimal[i]);
    }
    if (!(BigUint(out.size()) <= big_pow(4, static_cast<unsigned>(ctx.k))))
        throw ContractViolation("more than 4^k important separators enumerated: " +
                                std::to_string(out.size()));
    return out;
}

ArcSet push_to_important(const CutContext& ctx, const ArcSet& C) {
    validate_cut_context(ctx);
    const Digraph& g = ctx.graph;
    ArcSet current = canonical_cut(g, C, "cut to push");
    if (static_cast<int>(current.size()) > ctx.k)
        throw InputError("cut has " + std::to_string(current.size()) +
                         " arcs, more than the cap " + std::to_string(ctx.k));
    int src[1] = {ctx.s};
    std::vector<bool> removed = arc_id_mask(g, current);
    std::vector<bool> reach = reach_mask(g, src, nullptr, &removed);
    if (reach[static_cast<std::size_t>(ctx.t)])
        throw InputError("the given arc set is not an s-t cut");

    for (int round = 0; round <= g.vertex_count() + 2; ++round) {
        std::vector<int> source_list;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (reach[static_cast<std::size_t>(v)]) source_list.push_back(v);
        }
        SourceSetCut next = min_arc_cut_from_set(g, source_list, ctx.t,
                                                 static_cast<int>(current.size()));
        if (next.value > static_cast<int>(current.size()))
            throw ContractViolation("pushing produced a larger cut than it started from");
        ArcSet next_cut = next.cut;
        std::sort(next_cut.begin(), next_cut.end());
        if (next_cut == current) return current;
        current = std::move(next_cut);
        removed = arc_id_mask(g, current);
        reach = reach_mask(g, src, nullptr, &removed);
        if (reach[static_cast<std::size_t>(ctx.t)])
            throw ContractViolation("pushing produced a non-cut");
    }
    throw ContractViolation("pushing did not reach a fixpoint");
}

ArcSet participating_arcs(const CutContext& ctx, const SepLimits& limits) {
    ArcSet all;
    for (const ArcSet& cut : enum_minimal_cuts(ctx, limits)) {
        all.insert(all.end(), cut.begin(), cut.end());
    }
    return as_arc_set(std::move(all));
}

CoreResult cut_minimal_core(const CutContext& ctx, const SepLimits& limits) {
    validate_cut_context(ctx);
    CoreResult cur{ctx.graph, ctx.s, ctx.t, {}};
    cur.original_vertex.resize(static_cast<std::size_t>(ctx.graph.vertex_count()));
    for (int v = 0; v < ctx.graph.vertex_count(); ++v)
        cur.original_vertex[static_cast<std::size_t>(v)] = v;

    while (true) {
        CutContext pass_ctx{cur.graph, cur.s, cur.t, ctx.k};
        ArcSet parts = participating_arcs(pass_ctx, limits);
        std::vector<bool> incident(static_cast<std::size_t>(cur.graph.vertex_count()), false);
        for (const Arc& a : parts) {
            incident[static_cast<std::size_t>(a.first)] = true;
            incident[static_cast<std::size_t>(a.second)] = true;
        }
        std::vector<int> victims;
        for (int v = 0; v < cur.graph.vertex_count(); ++v) {
            if (v != cur.s && v != cur.t && !incident[static_cast<std::size_t>(v)])
                victims.push_back(v);
        }
        if (victims.empty()) break;
        // Descending order keeps the not-yet-bypassed ids valid as later ids
        // shift down.
        for (auto it = victims.rbegin(); it != victims.rend(); ++it) {
            int v = *it;
            int keep[2] = {cur.s, cur.t};
            cur.graph = bypass_vertex(cur.graph, v, keep);
            if (cur.s > v) --cur.s;
            if (cur.t > v) --cur.t;
            cur.original_vertex.erase(cur.original_vertex.begin() + v);
        }
    }
    return cur;
}

WellLinkedResult is_well_linked(const Digraph& g, std::vector<int> T, int max_terminals) {
    for (int v : T) g.check_vertex(v, "well-linked terminal");
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    if (static_cast<int>(T.size()) > max_terminals)
        throw ResourceLimitError("well-linked check limited to " + std::to_string(max_terminals) +
                                 " terminals, got " + std::to_string(T.size()));

    const std::size_t n = T.size();
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::uint64_t xm = 0; xm < (1ULL << n); ++xm) {
            if (static_cast<std::size_t>(std::popcount(xm)) != r) continue;
            for (std::uint64_t ym = 0; ym < (1ULL << n); ++ym) {
                if (static_cast<std::size_t>(std::popcount(ym)) != r) continue;
                std::vector<int> x, y, forbidden;
                for (std::size_t i = 0; i < n; ++i) {
                    bool in_x = (xm >> i) & 1;
                    bool in_y = (ym >> i) & 1;
                    if (in_x) x.push_back(T[i]);
                    if (in_y) y.push_back(T[i]);
                    if (!in_x && !in_y) forbidden.push_back(T[i]);
                }
                if (vertex_disjoint_paths(g, x, y, forbidden) < static_cast<int>(r))
                    return {false, std::move(x), std::move(y)};
            }
        }
    }
    return {true, {}, {}};
}

namespace {

std::optional<Sunflower> sunflower_rec(const std::vector<std::vector<int>>& family, int target) {
    if (family.empty()) return std::nullopt;
    const std::size_t d = family.front().size();

    // Greedy maximal pairwise-disjoint subfamily, in family order.
    std::vector<std::vector<int>> disjoint;
    std::set<int> used;
    for (const auto& s : family) {
        bool clashes = false;
        for (int e : s) {
            if (used.count(e)) {
                clashes = true;
                break;
            }
        }
        if (!clashes) {
            disjoint.push_back(s);
            used.insert(s.begin(), s.end());
        }
    }
    if (static_cast<int>(disjoint.size()) > target) return Sunflower{{}, std::move(disjoint)};
    if (d == 0) return std::nullopt;

    // Most frequent element, smallest id on ties; every set meets `used`, so
    // the winner appears in at least |family| / (d * |disjoint|) sets.
    std::map<int, int> frequency;
    for (const auto& s : family) {
        for (int e : s) ++frequency[e];
    }
    int popular = frequency.begin()->first;
    int best = 0;
    for (const auto& [elem, count] : frequency) {
        if (count > best) {
            best = count;
            popular = elem;
        }
    }
    std::vector<std::vector<int>> shrunk;
    for (const auto& s : family) {
        if (!std::binary_search(s.begin(), s.end(), popular)) continue;
        std::vector<int> rest;
        for (int e : s) {
            if (e != popular) rest.push_back(e);
        }
        shrunk.push_back(std::move(rest));
    }
    std::optional<Sunflower> inner = sunflower_rec(shrunk, target);
    if (!inner) return std::nullopt;
    auto reinsert = [popular](std::vector<int>& s) {
        s.insert(std::upper_bound(s.begin(), s.end(), popular), popular);
    };
    reinsert(inner->core);
    for (auto& petal : inner->petals) reinsert(petal);
    return inner;
}

}  // namespace

std::optional<Sunflower> find_sunflower(std::vector<std::vector<int>> family, int target) {
    if (target < 0) throw InputError("sunflower petal target must be nonnegative");
    if (family.empty()) return std::nullopt;
    for (auto& s : family) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("a family set repeats an element");
        if (s.size() != family.front().size())
            throw InputError("family sets must all have the same size");
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return sunflower_rec(family, target);
}

AntiIsolationReport check_anti_isolation(const Digraph& g, int s, const std::vector<int>& targets,
                                         const std::vector<ArcSet>& cuts, int k) {
    g.check_vertex(s, "anti-isolation source");
    for (int v : targets) g.check_vertex(v, "anti-isolation target");
    if (targets.size() != cuts.size())
        throw InputError("anti-isolation needs one cut per target: " +
                         std::to_string(targets.size()) + " targets vs " +
                         std::to_string(cuts.size()) + " cuts");
    if (k < 0) throw InputError("cut-size cap must be nonnegative");

    AntiIsolationReport report;
    report.r = static_cast<int>(targets.size());
    int src[1] = {s};
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        ArcSet canon = canonical_cut(g, cuts[i], "anti-isolation cut");
        if (static_cast<int>(canon.size()) > k)
            throw InputError("cut " + std::to_string(i) + " has " + std::to_string(canon.size()) +
                             " arcs, more than the cap " + std::to_string(k));
        std::vector<bool> removed = arc_id_mask(g, canon);
        std::vector<bool> reach = reach_mask(g, src, nullptr, &removed);
        std::vector<bool> row(targets.size());
        for (std::size_t j = 0; j < targets.size(); ++j)
            row[j] = reach[static_cast<std::size_t>(targets[j])];
        report.premise.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        for (std::size_t j = 0; j < targets.size(); ++j) {
            if (report.premise[i][j] != (i == j))
                report.premise_failures.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    report.premise_ok = report.premise_failures.empty();
    report.bound = bounds(k).g;
    report.within_bound = BigUint(static_cast<std::uint64_t>(report.r)) <= report.bound;
    if (report.premise_ok && !report.within_bound)
        throw ContractViolation("an isolating family of " + std::to_string(report.r) +
                                " cuts of size <= " + std::to_string(k) +
                                " exceeds the provable maximum " + report.bound.to_string());
    report.margin = report.within_bound
                        ? report.bound - BigUint(static_cast<std::uint64_t>(report.r))
                        : BigUint(0);
    return report;
}

std::optional<ArcSet> find_splitting_cut(const CutContext& ctx, const ArcSet& F,
                                         const SepLimits& limits) {
    validate_cut_context(ctx);
    ArcSet f_set = as_arc_set(F);
    ArcSet parts = participating_arcs(ctx, limits);
    for (const Arc& a : f_set) {
        if (!std::binary_search(parts.begin(), parts.end(), a))
            throw InputError("arc (" + std::to_string(a.first) + ", " + std::to_string(a.second) +
                             ") participates in no minimal cut of size <= " +
                             std::to_string(ctx.k));
    }
    Digraph rev = reverse_graph(ctx.graph);
    int src[1] = {ctx.s};
    int snk[1] = {ctx.t};
    for (const ArcSet& cut : enum_minimal_cuts(ctx, limits)) {
        ArcSet cut_pairs = as_arc_set(cut);
        std::vector<bool> removed = arc_id_mask(ctx.graph, cut_pairs);
        std::vector<bool> reach = reach_mask(ctx.graph, src, nullptr, &removed);
        std::vector<bool> coreach = reach_mask(rev, snk, nullptr, &removed);
        int from_side = 0;
        int to_side = 0;
        for (const Arc& a : f_set) {
            if (std::binary_search(cut_pairs.begin(), cut_pairs.end(), a)) continue;
            if (reach[static_cast<std::size_t>(a.first)]) ++from_side;
            if (coreach[static_cast<std::size_t>(a.second)]) ++to_side;
        }
        if (from_side > ctx.k && to_side > ctx.k) return cut;
    }
    return std::nullopt;
}

BoundValues bounds(int k) {
    if (k < 0) throw InputError("bound formulas need k >= 0");
    BoundValues out;
    out.g = BigUint(static_cast<std::uint64_t>(k) + 1) * big_pow(4, static_cast<unsigned>(k) + 1);
    BigUint sum(0);
    BigUint factorial(1);
    BigUint power(1);
    for (int d = 1; d <= 2 * k; ++d) {
        factorial *= BigUint(static_cast<std::uint64_t>(d));
        power *= out.g;
        sum += factorial * power;
    }
    out.h = BigUint(2) * out.g * sum;
    return out;
}

GridOrientationReport search_grid_orientations(int rows, int cols, int k,
                                               std::size_t max_report) {
    if (rows < 1 || cols < 1 || rows * cols < 2)
        throw InputError("grid search needs at least two vertices");
    if (k < 0) throw InputError("cut-size cap must be nonnegative");
    std::vector<Arc> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c + 1 < cols; ++c) edges.emplace_back(id(r, c), id(r, c + 1));
    }
    for (int r = 0; r + 1 < rows; ++r) {
        for (int c = 0; c < cols; ++c) edges.emplace_back(id(r, c), id(r + 1, c));
    }
    if (edges.size() > 20)
        throw ResourceLimitError("grid orientation search limited to 20 edges, got " +
                                 std::to_string(edges.size()));
    const int n = rows * cols;
    if (n - 2 > SepLimits{}.max_free_vertices)
        throw ResourceLimitError("grid too large for the minimal-cut auditor");

    GridOrientationReport report;
    report.rows = rows;
    report.cols = cols;
    report.k = k;
    for (std::uint64_t code = 0; code < (1ULL << edges.size()); ++code) {
        Digraph g(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (code >> e & 1)
                g.add_arc(edges[e].second, edges[e].first);
            else
                g.add_arc(edges[e].first, edges[e].second);
        }
        CutContext ctx{std::move(g), 0, n - 1, k};
        ArcSet parts = participating_arcs(ctx);
        std::vector<bool> incident(static_cast<std::size_t>(n), false);
        for (const Arc& a : parts) {
            incident[static_cast<std::size_t>(a.first)] = true;
            incident[static_cast<std::size_t>(a.second)] = true;
        }
        bool minimal = true;
        for (int v = 0; v < n && minimal; ++v) {
            if (v != 0 && v != n - 1 && !incident[static_cast<std::size_t>(v)]) minimal = false;
        }
        ++report.orientations_tested;
        if (minimal) {
            ++report.cut_minimal_count;
            if (report.cut_minimal_codes.size() < max_report)
                report.cut_minimal_codes.push_back(code);
            else
                report.truncated = true;
        }
    }
    return report;
}

}  // namespace dircuts
