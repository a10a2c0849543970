#ifndef SPLITDYN_COMPLETION_HPP
#define SPLITDYN_COMPLETION_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "splitdyn/obstruction_finder.hpp"

namespace splitdyn {

struct CompletionResult {
    bool yes = false;
    EdgeList witness;        // valid iff yes
    std::int64_t nodes = 0;  // search-tree size, <= sum_{i<=k} 5^i
};

namespace detail {

// Branch over the <= 5 ways of breaking the obstruction inside U:
// missing pairs for completion, present pairs for deletion. The live
// wrapper is mutated and restored around each branch.
inline bool branch_search(DynamicSplitGraph& w, int budget, bool inserting,
                          EdgeList& fixes, std::int64_t& nodes,
                          std::int64_t node_cap) {
    ++nodes;
    if (nodes > node_cap)
        throw std::logic_error("branch_search: node bound exceeded");
    if (w.splittance() > budget) return false; // any fix set is >= splittance edits
    auto obs = find_obstruction(w);
    if (!obs) return true;
    if (budget == 0) return false;
    const auto& u = obs->vertices;
    EdgeList moves;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (w.graph().has_edge(u[i], u[j]) != inserting)
                moves.push_back(canonical_edge(u[i], u[j]));
    std::sort(moves.begin(), moves.end());
    for (auto [a, b] : moves) {
        w.update(a, b);
        fixes.push_back({a, b});
        if (branch_search(w, budget - 1, inserting, fixes, nodes, node_cap))
            return true;
        fixes.pop_back();
        w.update(a, b);
    }
    return false;
}

inline CompletionResult query_edit(DynamicSplitGraph& w, bool inserting) {
    int k = w.k();
    CompletionResult res;
    std::int64_t cap = 0, pw = 1;
    for (int i = 0; i <= k; ++i) {
        cap += pw;
        pw *= 5;
    }
    if (w.splittance() > k) return res;
    res.yes = detail::branch_search(w, k, inserting, res.witness, res.nodes, cap);
    if (!res.yes) {
        res.witness.clear();
        return res;
    }
    // a successful search leaves the witness applied: confirm the result
    // deterministically, then roll the graph back
    bool good = w.splittance() == 0;
    for (auto it = res.witness.rbegin(); it != res.witness.rend(); ++it)
        w.update(it->first, it->second);
    if (!good) {
        res.yes = false;
        res.witness.clear();
        return res;
    }
    std::sort(res.witness.begin(), res.witness.end());
    return res;
}

} // namespace detail

// Can at most k edge insertions make the current graph split?
inline CompletionResult query_completion(DynamicSplitGraph& w) {
    return detail::query_edit(w, true);
}

// Can at most k edge deletions make the current graph split?
inline CompletionResult query_deletion(DynamicSplitGraph& w) {
    return detail::query_edit(w, false);
}

} // namespace splitdyn

#endif
