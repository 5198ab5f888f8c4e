#include "dircuts/psi.hpp"

#include <algorithm>

#include "dircuts/errors.hpp"
#include "dircuts/rng.hpp"

namespace dircuts {

int PsiInstance::host_vertex_count() const {
    int total = 0;
    for (const auto& cls : classes) total += static_cast<int>(cls.size());
    return total;
}

bool PsiInstance::has_host_edge(int u, int v) const {
    Arc key = u < v ? Arc{u, v} : Arc{v, u};
    return std::binary_search(host_edges.begin(), host_edges.end(), key);
}

int PsiInstance::pattern_degree(int i) const {
    int deg = 0;
    for (const Arc& e : pattern_edges)
        if (e.first == i || e.second == i) ++deg;
    return deg;
}

void validate_psi(const PsiInstance& inst) {
    int ell = inst.pattern_vertex_count;
    if (ell < 0 || inst.class_size < 0) throw InputError("psi: negative size field");
    if (static_cast<int>(inst.classes.size()) != ell)
        throw InputError("psi: expected " + std::to_string(ell) + " classes, got " +
                         std::to_string(inst.classes.size()));

    int total = inst.host_vertex_count();
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    for (const auto& cls : inst.classes) {
        for (int v : cls) {
            if (v < 0 || v >= total)
                throw InputError("psi: host vertex id " + std::to_string(v) +
                                 " outside dense range 0.." + std::to_string(total - 1));
            if (seen[static_cast<std::size_t>(v)])
                throw InputError("psi: host vertex " + std::to_string(v) + " in two classes");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    for (const Arc& e : inst.pattern_edges) {
        if (e.first < 1 || e.second < 1 || e.first > ell || e.second > ell)
            throw InputError("psi: pattern edge endpoint outside 1.." + std::to_string(ell));
        if (e.first >= e.second)
            throw InputError("psi: pattern edges must be stored as (i, j) with i < j");
    }
    if (!std::is_sorted(inst.pattern_edges.begin(), inst.pattern_edges.end()) ||
        std::adjacent_find(inst.pattern_edges.begin(), inst.pattern_edges.end()) !=
            inst.pattern_edges.end())
        throw InputError("psi: pattern edges must be sorted and unique");

    for (const Arc& e : inst.host_edges) {
        if (e.first < 0 || e.second < 0 || e.first >= total || e.second >= total)
            throw InputError("psi: host edge endpoint out of range");
        if (e.first >= e.second)
            throw InputError("psi: host edges must be stored as (u, v) with u < v");
    }
    if (!std::is_sorted(inst.host_edges.begin(), inst.host_edges.end()) ||
        std::adjacent_find(inst.host_edges.begin(), inst.host_edges.end()) != inst.host_edges.end())
        throw InputError("psi: host edges must be sorted and unique");
}

bool is_normalized(const PsiInstance& inst) {
    for (const auto& cls : inst.classes)
        if (static_cast<int>(cls.size()) != inst.class_size) return false;
    for (int i = 1; i <= inst.pattern_vertex_count; ++i)
        if (inst.pattern_degree(i) == 0) return false;
    return true;
}

std::optional<PsiInstance> normalize_psi(const PsiInstance& raw) {
    validate_psi(raw);

    // Keep only non-isolated pattern vertices, renumbering them densely.
    std::vector<int> new_index(static_cast<std::size_t>(raw.pattern_vertex_count) + 1, 0);
    int kept = 0;
    for (int i = 1; i <= raw.pattern_vertex_count; ++i)
        if (raw.pattern_degree(i) > 0) new_index[static_cast<std::size_t>(i)] = ++kept;

    PsiInstance out;
    out.pattern_vertex_count = kept;
    for (const Arc& e : raw.pattern_edges)
        out.pattern_edges.emplace_back(new_index[static_cast<std::size_t>(e.first)],
                                       new_index[static_cast<std::size_t>(e.second)]);
    std::sort(out.pattern_edges.begin(), out.pattern_edges.end());

    std::size_t max_size = 0;
    for (int i = 1; i <= raw.pattern_vertex_count; ++i) {
        if (new_index[static_cast<std::size_t>(i)] == 0) continue;
        const auto& cls = raw.classes[static_cast<std::size_t>(i - 1)];
        if (cls.empty()) return std::nullopt;  // a surviving class is empty: no assignment exists
        max_size = std::max(max_size, cls.size());
    }
    out.class_size = static_cast<int>(max_size);

    // Kept host vertices are renumbered densely in old-id order; padding
    // vertices are appended after them.
    std::vector<int> host_map(static_cast<std::size_t>(raw.host_vertex_count()), -1);
    {
        std::vector<bool> keep(host_map.size(), false);
        for (int i = 1; i <= raw.pattern_vertex_count; ++i) {
            if (new_index[static_cast<std::size_t>(i)] == 0) continue;
            for (int v : raw.classes[static_cast<std::size_t>(i - 1)])
                keep[static_cast<std::size_t>(v)] = true;
        }
        int next = 0;
        for (std::size_t v = 0; v < keep.size(); ++v)
            if (keep[v]) host_map[v] = next++;
    }

    out.classes.resize(static_cast<std::size_t>(kept));
    for (int i = 1; i <= raw.pattern_vertex_count; ++i) {
        int ni = new_index[static_cast<std::size_t>(i)];
        if (ni == 0) continue;
        auto& cls = out.classes[static_cast<std::size_t>(ni - 1)];
        for (int v : raw.classes[static_cast<std::size_t>(i - 1)])
            cls.push_back(host_map[static_cast<std::size_t>(v)]);
    }
    // Padding ids start after the kept vertices.
    int kept_hosts = 0;
    for (int m : host_map)
        if (m >= 0) ++kept_hosts;
    int fresh = kept_hosts;
    for (auto& cls : out.classes)
        while (static_cast<int>(cls.size()) < out.class_size) cls.push_back(fresh++);

    for (const Arc& e : raw.host_edges) {
        int u = host_map[static_cast<std::size_t>(e.first)];
        int v = host_map[static_cast<std::size_t>(e.second)];
        if (u < 0 || v < 0) continue;  // incident to a dropped class
        out.host_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(out.host_edges.begin(), out.host_edges.end());
    out.host_edges.erase(std::unique(out.host_edges.begin(), out.host_edges.end()),
                         out.host_edges.end());

    validate_psi(out);
    return out;
}

bool is_partitioned_homomorphism(const PsiInstance& inst, const Homomorphism& h) {
    if (!is_normalized(inst))
        throw InputError("is_partitioned_homomorphism: instance is not normalized");
    if (static_cast<int>(h.image.size()) != inst.pattern_vertex_count)
        throw InputError("is_partitioned_homomorphism: assignment has " +
                         std::to_string(h.image.size()) + " entries, expected " +
                         std::to_string(inst.pattern_vertex_count));
    for (int a : h.image)
        if (a < 1 || a > inst.class_size)
            throw InputError("is_partitioned_homomorphism: position " + std::to_string(a) +
                             " outside 1.." + std::to_string(inst.class_size));
    for (const Arc& e : inst.pattern_edges) {
        int u = inst.member(e.first, h.image[static_cast<std::size_t>(e.first - 1)]);
        int v = inst.member(e.second, h.image[static_cast<std::size_t>(e.second - 1)]);
        if (!inst.has_host_edge(u, v)) return false;
    }
    return true;
}

std::optional<Homomorphism> solve_psi(const PsiInstance& inst) {
    if (!is_normalized(inst)) throw InputError("solve_psi: instance is not normalized");
    if (inst.pattern_vertex_count == 0) return Homomorphism{};
    if (inst.class_size == 0) return std::nullopt;

    Homomorphism h;
    h.image.assign(static_cast<std::size_t>(inst.pattern_vertex_count), 1);
    for (;;) {
        if (is_partitioned_homomorphism(inst, h)) return h;
        // Odometer step, last coordinate fastest.
        int pos = inst.pattern_vertex_count - 1;
        while (pos >= 0 && h.image[static_cast<std::size_t>(pos)] == inst.class_size) {
            h.image[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return std::nullopt;
        ++h.image[static_cast<std::size_t>(pos)];
    }
}

PsiInstance gen_psi_planted(int n, std::span<const Arc> pattern_edges, std::uint64_t seed,
                            double noise) {
    if (n < 1) throw InputError("gen_psi_planted: class size must be at least 1");
    if (pattern_edges.empty()) throw InputError("gen_psi_planted: pattern has no edges");
    int ell = 0;
    for (const Arc& e : pattern_edges) ell = std::max({ell, e.first, e.second});

    PsiInstance inst;
    inst.class_size = n;
    inst.pattern_vertex_count = ell;
    for (const Arc& e : pattern_edges) {
        if (e.first < 1 || e.second < 1 || e.first == e.second)
            throw InputError("gen_psi_planted: bad pattern edge");
        inst.pattern_edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
    }
    std::sort(inst.pattern_edges.begin(), inst.pattern_edges.end());
    inst.pattern_edges.erase(std::unique(inst.pattern_edges.begin(), inst.pattern_edges.end()),
                             inst.pattern_edges.end());
    for (int i = 1; i <= ell; ++i)
        if (inst.pattern_degree(i) == 0)
            throw InputError("gen_psi_planted: pattern vertex " + std::to_string(i) +
                             " is isolated");

    inst.classes.resize(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i)
        for (int a = 0; a < n; ++a) inst.classes[static_cast<std::size_t>(i)].push_back(i * n + a);

    SplitMix64 rng(seed);
    Homomorphism planted;
    planted.image.reserve(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i) planted.image.push_back(1 + rng.below_int(n));

    std::vector<Arc> edges;
    for (const Arc& e : inst.pattern_edges) {
        int u = inst.member(e.first, planted.image[static_cast<std::size_t>(e.first - 1)]);
        int v = inst.member(e.second, planted.image[static_cast<std::size_t>(e.second - 1)]);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    // Noise between every pair of distinct classes, planted edges kept.
    for (int i = 1; i <= ell; ++i)
        for (int j = i + 1; j <= ell; ++j)
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    if (rng.chance(noise)) {
                        int u = inst.member(i, a), v = inst.member(j, b);
                        edges.emplace_back(std::min(u, v), std::max(u, v));
                    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    inst.host_edges = std::move(edges);

    validate_psi(inst);
    return inst;
}

}  // namespace dircuts
