#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace dircuts {

// Adjacency rows as bitsets, for the hot loops of the exact solvers.  Vertex
// v's out-neighborhood is a `words`-word mask.  "blocked" masks mark deleted
// vertices; blocked vertices are never entered (sources included).
struct BitAdjacency {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;

    explicit BitAdjacency(int vertices)
        : n(vertices),
          words((vertices + 63) / 64),
          rows(static_cast<std::size_t>(vertices) * static_cast<std::size_t>(words), 0) {}

    std::uint64_t* row(int v) { return rows.data() + static_cast<std::size_t>(v) * words; }
    const std::uint64_t* row(int v) const {
        return rows.data() + static_cast<std::size_t>(v) * words;
    }

    void add(int u, int v) { row(u)[v >> 6] |= 1ULL << (v & 63); }
    void remove(int u, int v) { row(u)[v >> 6] &= ~(1ULL << (v & 63)); }

    struct Scratch {
        std::vector<std::uint64_t> visited, frontier, next;
    };

    // True iff t is reachable from s when `blocked` vertices (nullable mask)
    // are removed.
    bool reaches(int s, int t, const std::uint64_t* blocked, Scratch& scratch) const {
        if (blocked && (blocked[s >> 6] >> (s & 63) & 1)) return false;
        if (s == t) return true;
        auto& visited = scratch.visited;
        auto& frontier = scratch.frontier;
        auto& next = scratch.next;
        visited.assign(static_cast<std::size_t>(words), 0);
        frontier.assign(static_cast<std::size_t>(words), 0);
        next.assign(static_cast<std::size_t>(words), 0);
        visited[s >> 6] |= 1ULL << (s & 63);
        frontier[s >> 6] |= 1ULL << (s & 63);
        for (;;) {
            std::fill(next.begin(), next.end(), 0);
            bool any = false;
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = frontier[static_cast<std::size_t>(w)];
                while (bits) {
                    int v = (w << 6) + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    const std::uint64_t* r = row(v);
                    for (int x = 0; x < words; ++x) next[static_cast<std::size_t>(x)] |= r[x];
                }
            }
            for (int w = 0; w < words; ++w) {
                std::uint64_t fresh = next[static_cast<std::size_t>(w)] &
                                      ~visited[static_cast<std::size_t>(w)];
                if (blocked) fresh &= ~blocked[w];
                next[static_cast<std::size_t>(w)] = fresh;
                visited[static_cast<std::size_t>(w)] |= fresh;
                any |= fresh != 0;
            }
            if (next[t >> 6] >> (t & 63) & 1) return true;
            if (!any) return false;
            frontier.swap(next);
        }
    }

    // Shortest path from s to t avoiding blocked vertices; returns the vertex
    // sequence (s..t) or empty if unreachable.  Deterministic: neighbors are
    // explored in ascending id order.
    std::vector<int> shortest_path(int s, int t, const std::uint64_t* blocked) const {
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        if (blocked && (blocked[s >> 6] >> (s & 63) & 1)) return {};
        std::vector<int> queue{s};
        parent[static_cast<std::size_t>(s)] = s;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (u == t) break;
            const std::uint64_t* r = row(u);
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = r[w];
                if (blocked) bits &= ~blocked[w];
                while (bits) {
                    int v = (w << 6) + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    if (parent[static_cast<std::size_t>(v)] != -1) continue;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                }
            }
        }
        if (parent[static_cast<std::size_t>(t)] == -1) return {};
        std::vector<int> path;
        for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
        path.push_back(s);
        std::reverse(path.begin(), path.end());
        return path;
    }
};

inline void mask_set(std::vector<std::uint64_t>& mask, int v) { mask[v >> 6] |= 1ULL << (v & 63); }
inline void mask_clear(std::vector<std::uint64_t>& mask, int v) {
    mask[v >> 6] &= ~(1ULL << (v & 63));
}
inline bool mask_test(const std::vector<std::uint64_t>& mask, int v) {
    return mask[v >> 6] >> (v & 63) & 1;
}

}  // namespace dircuts
