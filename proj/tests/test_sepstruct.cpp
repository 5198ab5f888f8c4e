// Tests for the separator-structure toolkit: minimal/important cut
// enumeration, cut pushing, cut-minimal cores, well-linkedness, sunflowers,
// the anti-isolation premise checker, splitting cuts, the explicit bound
// formulas, and the grid-orientation survey.  Reference behavior comes from
// the brute-force oracles.
#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "dircuts/bigint.hpp"
#include "dircuts/digraph.hpp"
#include "dircuts/errors.hpp"
#include "dircuts/rng.hpp"
#include "dircuts/sepstruct.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace {

using dircuts::Arc;
using dircuts::ArcSet;
using dircuts::BigUint;
using dircuts::ContractViolation;
using dircuts::CutContext;
using dircuts::Digraph;
using dircuts::InputError;
using dircuts::ResourceLimitError;
using dircuts::SepLimits;
using dircuts::SplitMix64;

Digraph graph_of(int n, const ArcSet& arcs) {
    Digraph g(n);
    for (const Arc& a : arcs) g.add_arc(a.first, a.second);
    return g;
}

// s = 0, t = 3, two internally disjoint length-2 routes.
CutContext diamond(int k) {
    return dircuts::make_cut_context(graph_of(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), 0, 3, k);
}

std::vector<bool> reach_without(const Digraph& g, int s, const ArcSet& cut) {
    std::vector<bool> removed = dircuts::arc_id_mask(g, cut);
    int src[1] = {s};
    return dircuts::reach_mask(g, src, nullptr, &removed);
}

bool mask_superset(const std::vector<bool>& big, const std::vector<bool>& small) {
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (small[i] && !big[i]) return false;
    }
    return true;
}

std::vector<int> sorted_intersection(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// The grid survey's documented edge order for 2 x 2: horizontal edges in row
// order, then vertical edges in row order; a set bit reverses the edge.
std::vector<Arc> grid_2x2_edges() { return {{0, 1}, {2, 3}, {0, 2}, {1, 3}}; }

Digraph orient_edges(int n, const std::vector<Arc>& edges, std::uint64_t code) {
    Digraph g(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (code >> e & 1)
            g.add_arc(edges[e].second, edges[e].first);
        else
            g.add_arc(edges[e].first, edges[e].second);
    }
    return g;
}

// Vertices touched by any inclusion-minimal s-t cut of size <= k, computed
// from the oracle enumeration.
std::vector<bool> oracle_cut_incidence(const Digraph& g, int s, int t, int k) {
    std::vector<bool> incident(static_cast<std::size_t>(g.vertex_count()), false);
    for (const ArcSet& cut : oracles::minimal_cuts(g, s, t, k)) {
        for (const Arc& a : cut) {
            incident[static_cast<std::size_t>(a.first)] = true;
            incident[static_cast<std::size_t>(a.second)] = true;
        }
    }
    return incident;
}

}  // namespace

TEST_CASE("cut context validation rejects bad source, sink, and cap") {
    Digraph g = graph_of(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(dircuts::make_cut_context(g, 0, 0, 1), InputError);
    CHECK_THROWS_AS(dircuts::make_cut_context(g, 0, 3, 1), InputError);
    CHECK_THROWS_AS(dircuts::make_cut_context(g, -1, 2, 1), InputError);
    CHECK_THROWS_AS(dircuts::make_cut_context(g, 0, 2, -1), InputError);
    CutContext ctx = dircuts::make_cut_context(g, 0, 2, 1);
    CHECK(ctx.s == 0);
    CHECK(ctx.t == 2);
    CHECK(ctx.k == 1);
}

TEST_CASE("diamond: minimal cuts, the one important separator, and pushing") {
    CutContext ctx = diamond(2);
    std::vector<ArcSet> minimal = dircuts::enum_minimal_cuts(ctx);
    std::vector<ArcSet> expected = {{{0, 1}, {0, 2}}, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}},
                                    {{1, 3}, {2, 3}}};
    CHECK(minimal == expected);

    ArcSet sink_side = {{1, 3}, {2, 3}};
    std::vector<ArcSet> important = dircuts::enum_important_separators(ctx);
    CHECK(important == std::vector<ArcSet>{sink_side});
    for (const ArcSet& cut : minimal) {
        CHECK(dircuts::is_important_separator(ctx, cut) == (cut == sink_side));
        // Every minimal cut pushes to the unique important separator here.
        CHECK(dircuts::push_to_important(ctx, cut) == sink_side);
    }
    CHECK(dircuts::participating_arcs(ctx) == ArcSet{{0, 1}, {0, 2}, {1, 3}, {2, 3}});

    // Below the minimum cut size nothing is enumerable.
    CutContext tight = diamond(1);
    CHECK(dircuts::enum_minimal_cuts(tight).empty());
    CHECK(dircuts::enum_important_separators(tight).empty());
    CHECK(dircuts::participating_arcs(tight).empty());
}

TEST_CASE("two-arc path: participation and importance") {
    CutContext ctx = dircuts::make_cut_context(graph_of(3, {{0, 1}, {1, 2}}), 0, 2, 1);
    CHECK(dircuts::enum_minimal_cuts(ctx) == std::vector<ArcSet>{{{0, 1}}, {{1, 2}}});
    CHECK(dircuts::participating_arcs(ctx) == ArcSet{{0, 1}, {1, 2}});
    CHECK(dircuts::enum_important_separators(ctx) == std::vector<ArcSet>{{{1, 2}}});
    CHECK_FALSE(dircuts::is_important_separator(ctx, {{0, 1}}));
    CHECK(dircuts::is_important_separator(ctx, {{1, 2}}));
    CHECK(dircuts::push_to_important(ctx, {{0, 1}}) == ArcSet{{1, 2}});
}

TEST_CASE("unreachable sink: the empty set is the unique important cut") {
    CutContext ctx = dircuts::make_cut_context(graph_of(2, {}), 0, 1, 0);
    CHECK(dircuts::enum_minimal_cuts(ctx) == std::vector<ArcSet>{{}});
    CHECK(dircuts::enum_important_separators(ctx) == std::vector<ArcSet>{{}});
    CHECK(dircuts::is_important_separator(ctx, {}));
    CHECK(dircuts::push_to_important(ctx, {}) == ArcSet{});
    CHECK(dircuts::participating_arcs(ctx).empty());
}

TEST_CASE("reachable sink with zero budget: no cuts, empty set rejected") {
    CutContext ctx = dircuts::make_cut_context(graph_of(3, {{0, 1}, {1, 2}}), 0, 2, 0);
    CHECK(dircuts::enum_minimal_cuts(ctx).empty());
    CHECK_FALSE(dircuts::is_important_separator(ctx, {}));
    CHECK_THROWS_AS(dircuts::push_to_important(ctx, {}), InputError);
}

TEST_CASE("caller-supplied cuts are canonicalized to full multiplicity") {
    Digraph g(3);
    g.add_arc(0, 1);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    CutContext ctx = dircuts::make_cut_context(g, 0, 2, 2);
    std::vector<ArcSet> minimal = dircuts::enum_minimal_cuts(ctx);
    CHECK(minimal == std::vector<ArcSet>{{{0, 1}, {0, 1}}, {{1, 2}}});
    // One listed copy stands for the whole parallel class.
    CHECK_FALSE(dircuts::is_important_separator(ctx, {{0, 1}}));
    CHECK(dircuts::is_important_separator(ctx, {{1, 2}}));
    CHECK(dircuts::push_to_important(ctx, {{0, 1}}) == ArcSet{{1, 2}});

    // With budget one the doubled class no longer fits any cut.
    CutContext tight = dircuts::make_cut_context(g, 0, 2, 1);
    CHECK(dircuts::enum_minimal_cuts(tight) == std::vector<ArcSet>{{{1, 2}}});
    CHECK(dircuts::participating_arcs(tight) == ArcSet{{1, 2}});
}

TEST_CASE("importance and pushing reject oversized, missing, or non-cut input") {
    CutContext ctx = diamond(2);
    CHECK_THROWS_AS(dircuts::is_important_separator(ctx, {{0, 3}}), InputError);
    CHECK_THROWS_AS(dircuts::push_to_important(ctx, {{3, 0}}), InputError);
    CutContext tight = diamond(1);
    CHECK_THROWS_AS(dircuts::is_important_separator(tight, {{1, 3}, {2, 3}}), InputError);
    CHECK_THROWS_AS(dircuts::push_to_important(tight, {{1, 3}, {2, 3}}), InputError);
    // A set that fails to separate is no cut: false for the predicate, an
    // error for the push.
    CHECK_FALSE(dircuts::is_important_separator(ctx, {{0, 1}, {1, 3}}));
    CHECK_THROWS_AS(dircuts::push_to_important(ctx, {{0, 1}, {1, 3}}), InputError);
    // A cut with a redundant arc is not inclusion-minimal.
    CutContext path = dircuts::make_cut_context(graph_of(3, {{0, 1}, {1, 2}}), 0, 2, 2);
    CHECK_FALSE(dircuts::is_important_separator(path, {{0, 1}, {1, 2}}));
}

TEST_CASE("enumeration limits trigger resource errors") {
    // 21-vertex chain: 19 interior vertices exceed the default side budget.
    ArcSet arcs;
    for (int v = 0; v + 1 < 21; ++v) arcs.push_back({v, v + 1});
    CutContext chain = dircuts::make_cut_context(graph_of(21, arcs), 0, 20, 1);
    CHECK_THROWS_AS(dircuts::enum_minimal_cuts(chain), ResourceLimitError);
    CHECK_THROWS_AS(dircuts::participating_arcs(chain), ResourceLimitError);

    SepLimits small_sides;
    small_sides.max_free_vertices = 1;
    CHECK_THROWS_AS(dircuts::enum_minimal_cuts(diamond(2), small_sides), ResourceLimitError);

    SepLimits small_scan;
    small_scan.max_subsets = 3;
    CHECK_THROWS_AS(dircuts::is_important_separator(diamond(2), {{1, 3}, {2, 3}}, small_scan),
                    ResourceLimitError);
}

TEST_CASE("minimal and important cut enumeration match the oracles") {
    SplitMix64 rng(0x5eed0001ULL);
    int nonempty = 0;
    for (int trial = 0; trial < 160; ++trial) {
        int n = 2 + rng.below_int(5);
        Digraph g = oracles::random_digraph(n, 0.35, rng, 0.2);
        int k = rng.below_int(4);
        CutContext ctx = dircuts::make_cut_context(g, 0, n - 1, k);

        std::vector<ArcSet> minimal = dircuts::enum_minimal_cuts(ctx);
        CHECK(minimal == oracles::minimal_cuts(g, 0, n - 1, k));
        std::vector<ArcSet> important = dircuts::enum_important_separators(ctx);
        CHECK(important == oracles::important_separators(g, 0, n - 1, k));

        std::uint64_t cap = 1;
        for (int i = 0; i < k; ++i) cap *= 4;
        CHECK(important.size() <= cap);
        if (!minimal.empty() && !minimal.front().empty()) ++nonempty;
    }
    CHECK(nonempty >= 30);
}

TEST_CASE("important enumeration equals the importance filter") {
    SplitMix64 rng(0x5eed0002ULL);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + rng.below_int(7);
        Digraph g = oracles::random_digraph(n, 0.3, rng, 0.15);
        int k = rng.below_int(4);
        CutContext ctx = dircuts::make_cut_context(g, 0, n - 1, k);
        std::vector<ArcSet> filtered;
        for (const ArcSet& cut : dircuts::enum_minimal_cuts(ctx)) {
            if (dircuts::is_important_separator(ctx, cut)) filtered.push_back(cut);
        }
        CHECK(dircuts::enum_important_separators(ctx) == filtered);
    }
}

TEST_CASE("pushing yields an important separator that keeps its reach") {
    SplitMix64 rng(0x5eed0003ULL);
    int pushes = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + rng.below_int(5);
        Digraph g = oracles::random_digraph(n, 0.35, rng, 0.2);
        int k = 1 + rng.below_int(3);
        CutContext ctx = dircuts::make_cut_context(g, 0, n - 1, k);
        std::vector<ArcSet> minimal = dircuts::enum_minimal_cuts(ctx);
        if (minimal.size() > 6) minimal.resize(6);
        for (const ArcSet& cut : minimal) {
            ArcSet pushed = dircuts::push_to_important(ctx, cut);
            CHECK(pushed.size() <= cut.size());
            CHECK(dircuts::is_important_separator(ctx, pushed));
            CHECK(dircuts::push_to_important(ctx, pushed) == pushed);
            CHECK(mask_superset(reach_without(g, 0, pushed), reach_without(g, 0, cut)));
            ++pushes;
        }
    }
    CHECK(pushes >= 40);
}

TEST_CASE("every vertex touches few participating arcs") {
    SplitMix64 rng(0x5eed0004ULL);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + rng.below_int(5);
        Digraph g = oracles::random_digraph(n, 0.4, rng, 0.25);
        int k = rng.below_int(4);
        CutContext ctx = dircuts::make_cut_context(g, 0, n - 1, k);
        ArcSet parts = dircuts::participating_arcs(ctx);
        std::uint64_t family_bound = 0;
        REQUIRE(dircuts::bounds(k).g.fits_u64(family_bound));
        for (int v = 0; v < n; ++v) {
            std::uint64_t incident = 0;
            for (const Arc& a : parts) {
                if (a.first == v || a.second == v) ++incident;
            }
            CHECK(incident <= 2 * family_bound);
        }
    }
}

TEST_CASE("core reduction bypasses a vertex shielded by a chord") {
    // Route 0 -> 1 -> 2 plus the direct arc 0 -> 2: with budget one no cut
    // exists, so vertex 1 sits on no minimal cut and is bypassed.
    CutContext ctx = dircuts::make_cut_context(graph_of(3, {{0, 1}, {0, 2}, {1, 2}}), 0, 2, 1);
    dircuts::CoreResult core = dircuts::cut_minimal_core(ctx);
    CHECK(core.graph.vertex_count() == 2);
    CHECK(core.graph.arcs() == ArcSet{{0, 1}});
    CHECK(core.s == 0);
    CHECK(core.t == 1);
    CHECK(core.original_vertex == std::vector<int>{0, 2});
    // The reduced graph may gain cuts the original lacked.
    CutContext reduced{core.graph, core.s, core.t, ctx.k};
    CHECK(dircuts::enum_minimal_cuts(reduced) == std::vector<ArcSet>{{{0, 1}}});
}

TEST_CASE("core reduction keeps every cut-touching vertex") {
    CutContext ctx = diamond(2);
    dircuts::CoreResult core = dircuts::cut_minimal_core(ctx);
    CHECK(core.graph.vertex_count() == 4);
    CHECK(core.graph.arcs() == ctx.graph.arcs());
    CHECK(core.s == 0);
    CHECK(core.t == 3);
    CHECK(core.original_vertex == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("core reduction: incidence, idempotence, and cut preservation") {
    SplitMix64 rng(0x5eed0005ULL);
    int preserved = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + rng.below_int(6);
        Digraph g = oracles::random_digraph(n, 0.3, rng, 0.0);
        int k = rng.below_int(4);
        CutContext ctx = dircuts::make_cut_context(g, 0, n - 1, k);
        std::vector<ArcSet> cuts_before = dircuts::enum_minimal_cuts(ctx);

        dircuts::CoreResult core = dircuts::cut_minimal_core(ctx);
        CutContext reduced{core.graph, core.s, core.t, k};

        // Every surviving interior vertex touches a minimal cut.
        ArcSet parts = dircuts::participating_arcs(reduced);
        for (int v = 0; v < core.graph.vertex_count(); ++v) {
            if (v == core.s || v == core.t) continue;
            bool touched = false;
            for (const Arc& a : parts) touched = touched || a.first == v || a.second == v;
            CHECK(touched);
        }

        // A second reduction changes nothing.
        dircuts::CoreResult again = dircuts::cut_minimal_core(reduced);
        CHECK(again.graph.arcs() == core.graph.arcs());
        CHECK(again.graph.vertex_count() == core.graph.vertex_count());
        CHECK(again.s == core.s);
        CHECK(again.t == core.t);

        // Minimal cuts that avoid the bypassed vertices survive unchanged
        // (as id-renamed copies) into the reduced graph.
        std::vector<int> to_new(static_cast<std::size_t>(n), -1);
        for (std::size_t idx = 0; idx < core.original_vertex.size(); ++idx)
            to_new[static_cast<std::size_t>(core.original_vertex[idx])] = static_cast<int>(idx);
        std::vector<ArcSet> cuts_after = dircuts::enum_minimal_cuts(reduced);
        for (const ArcSet& cut : cuts_before) {
            bool survives = true;
            for (const Arc& a : cut)
                survives = survives && to_new[static_cast<std::size_t>(a.first)] >= 0 &&
                           to_new[static_cast<std::size_t>(a.second)] >= 0;
            if (!survives) continue;
            ArcSet mapped;
            for (const Arc& a : cut)
                mapped.push_back({to_new[static_cast<std::size_t>(a.first)],
                                  to_new[static_cast<std::size_t>(a.second)]});
            std::sort(mapped.begin(), mapped.end());
            CHECK(mapped.size() == cut.size());
            CHECK(std::binary_search(cuts_after.begin(), cuts_after.end(), mapped));
            ++preserved;
        }
    }
    CHECK(preserved >= 30);
}

TEST_CASE("well-linkedness: path fixtures and the terminal cap") {
    Digraph path = graph_of(3, {{0, 1}, {1, 2}});
    dircuts::WellLinkedResult res = dircuts::is_well_linked(path, {0, 1, 2});
    CHECK_FALSE(res.well_linked);
    CHECK(res.violating_x == std::vector<int>{0});
    CHECK(res.violating_y == std::vector<int>{2});
    // The reported pair is a genuine violation: with the rest of the
    // terminals removed there is no route at all.
    CHECK(oracles::max_path_system(path, res.violating_x, res.violating_y, {1}) == 0);

    // Duplicated terminals collapse; the endpoints alone already fail in the
    // reverse direction.
    dircuts::WellLinkedResult ends = dircuts::is_well_linked(path, {0, 2, 2});
    CHECK_FALSE(ends.well_linked);
    CHECK(ends.violating_x == std::vector<int>{2});
    CHECK(ends.violating_y == std::vector<int>{0});

    Digraph triangle(3);
    for (int u = 0; u < 3; ++u) {
        for (int v = 0; v < 3; ++v) {
            if (u != v) triangle.add_arc(u, v);
        }
    }
    CHECK(dircuts::is_well_linked(triangle, {0, 1, 2}).well_linked);

    Digraph wide = graph_of(7, {{0, 1}});
    CHECK_THROWS_AS(dircuts::is_well_linked(wide, {0, 1, 2, 3, 4, 5}), ResourceLimitError);
    CHECK_FALSE(dircuts::is_well_linked(wide, {0, 1, 2, 3, 4, 5}, 6).well_linked);
    CHECK_THROWS_AS(dircuts::is_well_linked(wide, {0, 7}), InputError);
}

TEST_CASE("well-linkedness agrees with the path-system oracle") {
    SplitMix64 rng(0x5eed0006ULL);
    int linked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + rng.below_int(4);
        Digraph g = oracles::random_digraph(n, 0.4, rng, 0.0);
        std::set<int> picked;
        int want = 1 + rng.below_int(4);
        while (static_cast<int>(picked.size()) < want) picked.insert(rng.below_int(n));
        std::vector<int> T(picked.begin(), picked.end());

        dircuts::WellLinkedResult res = dircuts::is_well_linked(g, T);

        bool expect = true;
        std::size_t m = T.size();
        for (std::uint64_t xm = 1; xm < (1ULL << m) && expect; ++xm) {
            for (std::uint64_t ym = 1; ym < (1ULL << m) && expect; ++ym) {
                std::vector<int> x, y, forbidden;
                for (std::size_t i = 0; i < m; ++i) {
                    bool in_x = (xm >> i) & 1;
                    bool in_y = (ym >> i) & 1;
                    if (in_x) x.push_back(T[i]);
                    if (in_y) y.push_back(T[i]);
                    if (!in_x && !in_y) forbidden.push_back(T[i]);
                }
                if (x.size() != y.size()) continue;
                if (oracles::max_path_system(g, x, y, forbidden) < static_cast<int>(x.size()))
                    expect = false;
            }
        }
        CHECK(res.well_linked == expect);
        if (res.well_linked) {
            ++linked;
        } else {
            std::vector<int> forbidden;
            for (int v : T) {
                bool used = std::find(res.violating_x.begin(), res.violating_x.end(), v) !=
                                res.violating_x.end() ||
                            std::find(res.violating_y.begin(), res.violating_y.end(), v) !=
                                res.violating_y.end();
                if (!used) forbidden.push_back(v);
            }
            CHECK(oracles::max_path_system(g, res.violating_x, res.violating_y, forbidden) <
                  static_cast<int>(res.violating_x.size()));
        }
    }
    CHECK(linked >= 5);
    CHECK(linked <= 55);
}

TEST_CASE("sunflower search: pinned families") {
    std::optional<dircuts::Sunflower> shared =
        dircuts::find_sunflower({{1, 2}, {1, 3}, {1, 4}}, 2);
    REQUIRE(shared.has_value());
    CHECK(shared->core == std::vector<int>{1});
    CHECK(shared->petals.size() == 3);

    std::optional<dircuts::Sunflower> disjoint = dircuts::find_sunflower({{1}, {2}, {3}}, 2);
    REQUIRE(disjoint.has_value());
    CHECK(disjoint->core.empty());
    CHECK(disjoint->petals.size() == 3);

    // Literal duplicates and reordered copies collapse to one set.
    std::optional<dircuts::Sunflower> deduped =
        dircuts::find_sunflower({{1, 2}, {2, 1}, {1, 2}, {1, 3}, {1, 4}}, 2);
    REQUIRE(deduped.has_value());
    CHECK(deduped->petals.size() == 3);

    CHECK_FALSE(dircuts::find_sunflower({{1, 2}, {1, 3}, {1, 4}}, 3).has_value());
    CHECK_FALSE(dircuts::find_sunflower({}, 0).has_value());

    CHECK_THROWS_AS(dircuts::find_sunflower({{1, 1}}, 1), InputError);
    CHECK_THROWS_AS(dircuts::find_sunflower({{1}, {2, 3}}, 1), InputError);
    CHECK_THROWS_AS(dircuts::find_sunflower({{1}}, -1), InputError);
}

TEST_CASE("sunflower search: guarantee threshold and output property") {
    SplitMix64 rng(0x5eed0007ULL);
    const int universe = 12;
    auto random_family = [&](int d, int count) {
        std::set<std::vector<int>> sets;
        while (static_cast<int>(sets.size()) < count) {
            std::set<int> members;
            while (static_cast<int>(members.size()) < d) members.insert(rng.below_int(universe));
            sets.insert(std::vector<int>(members.begin(), members.end()));
        }
        return std::vector<std::vector<int>>(sets.begin(), sets.end());
    };
    auto check_sunflower = [](const dircuts::Sunflower& sf,
                              const std::vector<std::vector<int>>& family, int target) {
        CHECK(sf.petals.size() > static_cast<std::size_t>(target));
        for (const auto& petal : sf.petals) {
            CHECK(std::find(family.begin(), family.end(), petal) != family.end());
            CHECK(sorted_intersection(sf.core, petal) == sf.core);
        }
        for (std::size_t i = 0; i < sf.petals.size(); ++i) {
            for (std::size_t j = i + 1; j < sf.petals.size(); ++j)
                CHECK(sorted_intersection(sf.petals[i], sf.petals[j]) == sf.core);
        }
    };

    for (int trial = 0; trial < 500; ++trial) {
        int d = 1 + rng.below_int(3);
        int target = 1 + rng.below_int(3);
        int threshold = 1;
        for (int i = 1; i <= d; ++i) threshold *= i;
        for (int i = 0; i < d; ++i) threshold *= target;
        // Above the threshold a sunflower is guaranteed.
        std::vector<std::vector<int>> family = random_family(d, threshold + 1);
        std::optional<dircuts::Sunflower> found = dircuts::find_sunflower(family, target);
        REQUIRE(found.has_value());
        check_sunflower(*found, family, target);
    }
    int found_small = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int d = 1 + rng.below_int(3);
        int target = 1 + rng.below_int(3);
        int count = 1 + rng.below_int(20);
        std::vector<std::vector<int>> family = random_family(d, count);
        std::optional<dircuts::Sunflower> found = dircuts::find_sunflower(family, target);
        if (found) {
            check_sunflower(*found, family, target);
            ++found_small;
        }
    }
    CHECK(found_small >= 10);
}

TEST_CASE("anti-isolation report on the two-ray star") {
    Digraph star = graph_of(3, {{0, 1}, {0, 2}});
    std::vector<ArcSet> cuts = {{{0, 2}}, {{0, 1}}};
    dircuts::AntiIsolationReport rep = dircuts::check_anti_isolation(star, 0, {1, 2}, cuts, 1);
    CHECK(rep.r == 2);
    CHECK(rep.premise == std::vector<std::vector<bool>>{{true, false}, {false, true}});
    CHECK(rep.premise_ok);
    CHECK(rep.premise_failures.empty());
    CHECK(rep.bound.to_string() == "32");
    CHECK(rep.within_bound);
    CHECK(rep.margin.to_string() == "30");

    dircuts::AntiIsolationReport solo = dircuts::check_anti_isolation(star, 0, {1}, {{{0, 2}}}, 1);
    CHECK(solo.premise_ok);
    CHECK(solo.margin.to_string() == "31");

    dircuts::AntiIsolationReport zero = dircuts::check_anti_isolation(star, 0, {1}, {{}}, 0);
    CHECK(zero.premise_ok);
    CHECK(zero.bound.to_string() == "4");
    CHECK(zero.margin.to_string() == "3");

    // Empty cuts leave both targets reachable: the off-diagonal entries fail.
    dircuts::AntiIsolationReport bad = dircuts::check_anti_isolation(star, 0, {1, 2}, {{}, {}}, 1);
    CHECK_FALSE(bad.premise_ok);
    CHECK(bad.premise == std::vector<std::vector<bool>>{{true, true}, {true, true}});
    CHECK(bad.premise_failures == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});
    CHECK(bad.within_bound);

    CHECK_THROWS_AS(dircuts::check_anti_isolation(star, 0, {1, 2}, {{}}, 1), InputError);
    CHECK_THROWS_AS(dircuts::check_anti_isolation(star, 0, {1}, {{{0, 1}}}, 0), InputError);
    CHECK_THROWS_AS(dircuts::check_anti_isolation(star, 0, {1}, {{{1, 2}}}, 1), InputError);
    CHECK_THROWS_AS(dircuts::check_anti_isolation(star, 0, {3}, {{}}, 1), InputError);
    CHECK_THROWS_AS(dircuts::check_anti_isolation(star, 3, {1}, {{}}, 1), InputError);
}

TEST_CASE("splitting cut on the five-arc chain") {
    ArcSet arcs = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    CutContext ctx = dircuts::make_cut_context(graph_of(6, arcs), 0, 5, 1);

    std::optional<ArcSet> split = dircuts::find_splitting_cut(ctx, arcs);
    REQUIRE(split.has_value());
    CHECK(*split == ArcSet{{2, 3}});

    // Recheck the two side conditions directly: strictly more than k arcs of
    // the family stay attached to each terminal once the cut is removed.
    std::vector<bool> reach = reach_without(ctx.graph, 0, *split);
    std::vector<bool> coreach = reach_without(dircuts::reverse_graph(ctx.graph), 5, *split);
    int from_side = 0;
    int to_side = 0;
    for (const Arc& a : arcs) {
        if (a == Arc{2, 3}) continue;
        if (reach[static_cast<std::size_t>(a.first)]) ++from_side;
        if (coreach[static_cast<std::size_t>(a.second)]) ++to_side;
    }
    CHECK(from_side == 2);
    CHECK(to_side == 2);

    CHECK_FALSE(dircuts::find_splitting_cut(ctx, {{0, 1}, {4, 5}}).has_value());
    CHECK_FALSE(dircuts::find_splitting_cut(ctx, {}).has_value());
    // Arcs outside the participating set are rejected.
    CHECK_THROWS_AS(dircuts::find_splitting_cut(diamond(1), {{0, 1}}), InputError);
}

TEST_CASE("bound formulas match their pinned values") {
    dircuts::BoundValues b0 = dircuts::bounds(0);
    CHECK(b0.g.to_string() == "4");
    CHECK(b0.h.to_string() == "0");
    dircuts::BoundValues b1 = dircuts::bounds(1);
    CHECK(b1.g.to_string() == "32");
    CHECK(b1.h.to_string() == "133120");
    // 133120 = 2 * 32 * (1!*32 + 2!*32^2)
    CHECK(BigUint(2) * BigUint(32) * (BigUint(32) + BigUint(2) * BigUint(32) * BigUint(32)) ==
          b1.h);
    CHECK(dircuts::bounds(2).g.to_string() == "192");
    CHECK_THROWS_AS(dircuts::bounds(-1), InputError);
}

TEST_CASE("grid orientation survey matches an oracle audit") {
    // 2 x 2 grid, both budgets: every one of the 16 orientations is audited
    // against the oracle's cut enumeration.
    for (int k = 1; k <= 2; ++k) {
        dircuts::GridOrientationReport rep = dircuts::search_grid_orientations(2, 2, k);
        CHECK(rep.rows == 2);
        CHECK(rep.cols == 2);
        CHECK(rep.k == k);
        CHECK(rep.orientations_tested == 16);
        CHECK_FALSE(rep.truncated);
        std::vector<std::uint64_t> expected;
        for (std::uint64_t code = 0; code < 16; ++code) {
            Digraph g = orient_edges(4, grid_2x2_edges(), code);
            std::vector<bool> incident = oracle_cut_incidence(g, 0, 3, k);
            if (incident[1] && incident[2]) expected.push_back(code);
        }
        CHECK(rep.cut_minimal_codes == expected);
        CHECK(rep.cut_minimal_count == expected.size());
        if (k == 1) CHECK(expected.empty());
        // With budget two only the all-forward orientation keeps both
        // interior corners on minimal cuts.
        if (k == 2) CHECK(expected == std::vector<std::uint64_t>{0});
    }

    // A 1 x 2 grid has no interior vertices, so both orientations pass.
    dircuts::GridOrientationReport tiny = dircuts::search_grid_orientations(1, 2, 1);
    CHECK(tiny.orientations_tested == 2);
    CHECK(tiny.cut_minimal_codes == std::vector<std::uint64_t>{0, 1});
    CHECK(tiny.cut_minimal_count == 2);

    dircuts::GridOrientationReport capped = dircuts::search_grid_orientations(1, 2, 1, 1);
    CHECK(capped.cut_minimal_codes == std::vector<std::uint64_t>{0});
    CHECK(capped.cut_minimal_count == 2);
    CHECK(capped.truncated);

    CHECK_THROWS_AS(dircuts::search_grid_orientations(1, 1, 1), InputError);
    CHECK_THROWS_AS(dircuts::search_grid_orientations(2, 2, -1), InputError);
    CHECK_THROWS_AS(dircuts::search_grid_orientations(4, 4, 1), ResourceLimitError);
    CHECK_THROWS_AS(dircuts::search_grid_orientations(1, 21, 1), ResourceLimitError);
}
