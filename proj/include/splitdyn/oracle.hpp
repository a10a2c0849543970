#ifndef SPLITDYN_ORACLE_HPP
#define SPLITDYN_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "splitdyn/graph.hpp"

namespace splitdyn::oracle {

// Brute-force references used by tests and the self-test harness. These
// deliberately share nothing with the incremental stack beyond the Graph
// representation they read.

struct CompletionAnswer {
    bool yes = false;
    EdgeList witness; // valid iff yes
};

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.size()) + 1, 0);
    for (Vertex v = 1; v <= g.size(); ++v)
        for (Vertex u : g.neighbors(v)) adj[v] |= 1ULL << (u - 1);
    return adj;
}

// Exact splittance by minimizing over all 2^n partitions. Edge counts of
// induced subgraphs come from a one-pass subset DP.
inline std::int64_t brute_splittance(const Graph& g) {
    int n = g.size();
    if (n > 20) throw TooLarge("brute_splittance: n > 20");
    auto adj = adjacency_masks(g);
    std::size_t full = std::size_t{1} << n;
    std::vector<std::int32_t> inner(full, 0);
    for (std::size_t s = 1; s < full; ++s) {
        int low = std::countr_zero(s);
        std::size_t rest = s & (s - 1);
        inner[s] = inner[rest] +
                   std::popcount(adj[low + 1] & static_cast<std::uint64_t>(rest));
    }
    std::int64_t best = -1;
    std::size_t all = full - 1;
    for (std::size_t a = 0; a < full; ++a) {
        int sz = std::popcount(a);
        std::int64_t cost = static_cast<std::int64_t>(sz) * (sz - 1) / 2 - inner[a] +
                            inner[all & ~a];
        if (best < 0 || cost < best) best = cost;
    }
    return best;
}

// The greedy degree-sequence formula: sort degrees descending, take the
// longest prefix with d_i >= i - 1, and halve the resulting edit count.
inline std::int64_t ladder_splittance(const Graph& g) {
    int n = g.size();
    std::vector<std::int64_t> deg;
    deg.reserve(n);
    for (Vertex v = 1; v <= n; ++v) deg.push_back(g.degree(v));
    std::sort(deg.rbegin(), deg.rend());
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (deg[i - 1] >= i - 1) m = i;
    std::int64_t prefix = 0, total = 0;
    for (int i = 0; i < n; ++i) {
        total += deg[i];
        if (i < m) prefix += deg[i];
    }
    return (static_cast<std::int64_t>(m) * (m - 1) - prefix + (total - prefix)) / 2;
}

namespace detail {

inline std::optional<ObstructionKind> kind_of(const std::vector<std::uint64_t>& adj,
                                              const std::vector<Vertex>& u) {
    int deg[5] = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (adj[u[i]] >> (u[j] - 1) & 1) {
                ++deg[i];
                ++deg[j];
            }
    bool all1 = true, all2 = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
        all1 = all1 && deg[i] == 1;
        all2 = all2 && deg[i] == 2;
    }
    if (u.size() == 4 && all1) return ObstructionKind::TwoK2;
    if (u.size() == 4 && all2) return ObstructionKind::C4;
    if (u.size() == 5 && all2) return ObstructionKind::C5;
    return std::nullopt;
}

template <typename Fn>
void for_each_subset(int n, int r, Fn&& fn) {
    std::vector<Vertex> pick(r);
    auto rec = [&](auto&& self, int next, int depth) -> bool {
        if (depth == r) return fn(pick);
        for (Vertex v = next; v <= n - (r - depth - 1); ++v) {
            pick[depth] = v;
            if (self(self, v + 1, depth + 1)) return true;
        }
        return false;
    };
    rec(rec, 1, 0);
}

} // namespace detail

// All vertex sets inducing a 2K2, C4 or C5 (every such set, once).
inline std::vector<Obstruction> brute_obstructions(const Graph& g) {
    int n = g.size();
    if (n > 40) throw TooLarge("brute_obstructions: n > 40");
    auto adj = adjacency_masks(g);
    std::vector<Obstruction> out;
    for (int r : {4, 5}) {
        if (n < r) continue;
        detail::for_each_subset(n, r, [&](const std::vector<Vertex>& u) {
            if (auto kind = detail::kind_of(adj, u)) out.push_back({*kind, u});
            return false;
        });
    }
    return out;
}

namespace detail {

inline std::optional<std::vector<Vertex>> first_obstruction(
    const std::vector<std::uint64_t>& adj, int n) {
    std::optional<std::vector<Vertex>> hit;
    for (int r : {4, 5}) {
        if (hit || n < r) break;
        for_each_subset(n, r, [&](const std::vector<Vertex>& u) {
            if (kind_of(adj, u)) {
                hit = u;
                return true;
            }
            return false;
        });
    }
    return hit;
}

inline bool edit_search(std::vector<std::uint64_t>& adj, int n, int budget,
                        bool inserting, EdgeList& fixes) {
    auto u = first_obstruction(adj, n);
    if (!u) return true;
    if (budget == 0) return false;
    for (std::size_t i = 0; i < u->size(); ++i) {
        for (std::size_t j = i + 1; j < u->size(); ++j) {
            Vertex a = (*u)[i], b = (*u)[j];
            bool present = adj[a] >> (b - 1) & 1;
            if (present == inserting) continue;
            adj[a] ^= 1ULL << (b - 1);
            adj[b] ^= 1ULL << (a - 1);
            fixes.push_back(canonical_edge(a, b));
            if (edit_search(adj, n, budget - 1, inserting, fixes)) return true;
            fixes.pop_back();
            adj[a] ^= 1ULL << (b - 1);
            adj[b] ^= 1ULL << (a - 1);
        }
    }
    return false;
}

inline CompletionAnswer edit_answer(const Graph& g, int k, bool inserting) {
    if (g.size() > 24) throw TooLarge("oracle edit search: n > 24");
    if (k > 6) throw TooLarge("oracle edit search: k > 6");
    auto adj = adjacency_masks(g);
    CompletionAnswer ans;
    ans.yes = edit_search(adj, g.size(), k, inserting, ans.witness);
    if (!ans.yes) ans.witness.clear();
    std::sort(ans.witness.begin(), ans.witness.end());
    return ans;
}

} // namespace detail

// Can at most k edge insertions (resp. deletions) make g split?
inline CompletionAnswer brute_completion(const Graph& g, int k) {
    return detail::edit_answer(g, k, true);
}

inline CompletionAnswer brute_deletion(const Graph& g, int k) {
    return detail::edit_answer(g, k, false);
}

} // namespace splitdyn::oracle

#endif
