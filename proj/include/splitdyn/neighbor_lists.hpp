#ifndef SPLITDYN_NEIGHBOR_LISTS_HPP
#define SPLITDYN_NEIGHBOR_LISTS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "splitdyn/flat_map.hpp"
#include "splitdyn/graph.hpp"
#include "splitdyn/rng.hpp"

namespace splitdyn {

inline int ceil_log2(std::int64_t n) {
    int r = 0;
    while ((std::int64_t{1} << r) < n) ++r;
    return std::max(r, 1);
}

// Which vertices belong to the sample set S: either all of V, or a
// pseudo-random subset holding each vertex independently with probability
// 2^-level, fixed by (seed, salt) so membership never changes.
struct SubsetSpec {
    bool all = true;
    std::uint64_t seed = 0;
    std::uint64_t salt = 0;
    int level = 0;

    static SubsetSpec everything() { return {}; }
    static SubsetSpec sampled(std::uint64_t seed, std::uint64_t salt, int level) {
        return {false, seed, salt, level};
    }

    bool contains(Vertex v) const {
        if (all || level == 0) return true;
        return (hash3(seed, salt, static_cast<std::uint64_t>(v)) >> (64 - level)) == 0;
    }
};

// A graph together with a near-split partition (A, B) and the short
// certificate lists that make it one: the non-edges inside A and the edges
// inside B.
struct PartitionedGraph {
    Graph g;
    std::vector<char> in_a;
    EdgeList non_edges_a;
    EdgeList edges_b;

    explicit PartitionedGraph(Vertex n)
        : g(n), in_a(static_cast<std::size_t>(n) + 1, 0) {}
};

// Color-coded neighbor listing over a shared graph. For each of C
// pseudo-random colorings chi_i : V -> [width] we maintain, per vertex v,
// the id-sum of N(v) cap S in every color class, plus the id-sums of
// A cap S. A neighbor that is alone in its color class is recovered by
// subtracting the known A-side contribution from the bucket sum; every
// candidate is verified against the graph, and the exact target size
// (computed by inclusion-exclusion from countS and the certificate lists)
// tells us when the list is complete. With C = 40 * d * ceil(log2 n)
// colorings a miss is a low-probability event surfaced as SamplingFailed.
//
// The core does not own or mutate the graph; the owner mutates the shared
// PartitionedGraph and notifies every core it feeds.
class ColorCore {
public:
    ColorCore(const PartitionedGraph* p, int ell, int d, std::uint64_t seed,
              SubsetSpec s)
        : p_(p),
          ell_(ell),
          subset_(s),
          color_seed_(derive_seed(seed, 0x636f6c6fULL)),
          width_(static_cast<int>(
              std::min<std::int64_t>(std::max(ell, 1), p->g.size()))),
          colorings_(40 * std::max(d, 1) * ceil_log2(p->g.size())) {
        if (ell < 1) throw InvalidSize("ColorCore: ell < 1");
        if (width_ >= (1 << 19) || colorings_ >= (1 << 14))
            throw InvalidSize("ColorCore: parameters exceed key packing");
    }

    int colorings() const { return colorings_; }
    int width() const { return width_; }
    int ell() const { return ell_; }
    bool in_s(Vertex v) const { return subset_.contains(v); }

    // Vertex w is now on side A (sign +1) or left it (sign -1).
    void on_side_flip(Vertex w, int sign) {
        if (!subset_.contains(w)) return;
        count_as_ += sign;
        for (int i = 0; i < colorings_; ++i)
            id_sum_as_.add(key2(i, color_of(i, w)), sign * static_cast<std::int64_t>(w));
    }

    // Edge {u,v} appeared (+1) or vanished (-1).
    void on_edge(Vertex u, Vertex v, int sign) {
        account_half(u, v, sign);
        account_half(v, u, sign);
    }

    // Exact |N(a) cap B cap S| for a in A (inclusion-exclusion; no
    // randomness involved).
    std::int64_t neighbors_bs_size(Vertex a) const {
        std::vector<Vertex> hole = endpoints_with(p_->non_edges_a, a);
        std::int64_t in_as =
            count_as_ - (subset_.contains(a) ? 1 : 0) - count_in_s(hole);
        return count_s_.get(static_cast<std::uint64_t>(a)) - in_as;
    }

    std::int64_t non_neighbors_as_size(Vertex b) const {
        std::vector<Vertex> known = endpoints_with(p_->edges_b, b);
        std::int64_t nbrs_as =
            count_s_.get(static_cast<std::uint64_t>(b)) - count_in_s(known);
        return count_as_ - nbrs_as;
    }

    // N(a) cap B cap S for a in A, or nullopt if it has more than ell
    // elements.
    std::optional<std::vector<Vertex>> list_neighbors_bs(Vertex a) const {
        p_->g.check_vertex(a);
        if (!p_->in_a[a]) throw WrongSide("list_neighbors_bs: vertex not in A");
        std::int64_t size = neighbors_bs_size(a);
        if (size > ell_) return std::nullopt;
        return decode(a, size, true, colorings_);
    }

    // (A \ N(b)) cap S for b in B, or nullopt if it has more than ell
    // elements.
    std::optional<std::vector<Vertex>> list_non_neighbors_as(Vertex b) const {
        p_->g.check_vertex(b);
        if (p_->in_a[b]) throw WrongSide("list_non_neighbors_as: vertex not in B");
        std::int64_t size = non_neighbors_as_size(b);
        if (size > ell_) return std::nullopt;
        return decode(b, size, false, colorings_);
    }

    // Diagnostic variant that only consults the first `use` colorings;
    // lets tests measure how much a single coloring exposes.
    std::vector<Vertex> recovered_neighbors_bs(Vertex a, int use) const {
        std::vector<Vertex> out;
        decode_into(a, neighbors_bs_size(a), true, use, out);
        return out;
    }

private:
    int color_of(int i, Vertex v) const {
        return static_cast<int>(hash3(color_seed_, static_cast<std::uint64_t>(i),
                                      static_cast<std::uint64_t>(v)) %
                                static_cast<std::uint64_t>(width_));
    }

    static std::uint64_t key3(Vertex v, int i, int c) {
        return (static_cast<std::uint64_t>(v) << 33) |
               (static_cast<std::uint64_t>(i) << 19) | static_cast<std::uint64_t>(c);
    }

    static std::uint64_t key2(int i, int c) {
        return (static_cast<std::uint64_t>(i) << 19) | static_cast<std::uint64_t>(c);
    }

    void account_half(Vertex u, Vertex other, int sign) {
        if (!subset_.contains(other)) return;
        count_s_.add(static_cast<std::uint64_t>(u), sign);
        for (int i = 0; i < colorings_; ++i)
            id_sum_s_.add(key3(u, i, color_of(i, other)),
                          sign * static_cast<std::int64_t>(other));
    }

    static std::vector<Vertex> endpoints_with(const EdgeList& list, Vertex x) {
        std::vector<Vertex> out;
        for (auto [u, v] : list) {
            if (u == x) out.push_back(v);
            if (v == x) out.push_back(u);
        }
        return out;
    }

    std::int64_t count_in_s(const std::vector<Vertex>& vs) const {
        std::int64_t c = 0;
        for (Vertex v : vs) c += subset_.contains(v) ? 1 : 0;
        return c;
    }

    std::optional<std::vector<Vertex>> decode(Vertex q, std::int64_t size,
                                              bool neighbors, int use) const {
        std::vector<Vertex> out;
        if (decode_into(q, size, neighbors, use, out)) return out;
        throw SamplingFailed("ColorCore: no coloring recovered the full list");
    }

    // `extra` terms: for neighbor queries the non-neighbors of q inside A
    // must be added back into the A-side correction; for non-neighbor
    // queries the B-side neighbors of q must be removed from q's row.
    // Both are short lists read off the certificates.
    bool decode_into(Vertex q, std::int64_t size, bool neighbors, int use,
                     std::vector<Vertex>& out) const {
        out.clear();
        if (size < 0)
            throw std::logic_error("ColorCore: negative list size");
        if (size == 0) return true;
        std::vector<Vertex> extra =
            endpoints_with(neighbors ? p_->non_edges_a : p_->edges_b, q);
        std::vector<std::int64_t> extra_sum(width_, 0);
        for (int i = 0; i < use && i < colorings_; ++i) {
            std::fill(extra_sum.begin(), extra_sum.end(), 0);
            for (Vertex v : extra)
                if (subset_.contains(v)) extra_sum[color_of(i, v)] += v;
            int self_c =
                (neighbors && p_->in_a[q] && subset_.contains(q)) ? color_of(i, q) : -1;
            for (int c = 0; c < width_; ++c) {
                std::int64_t as = id_sum_as_.get(key2(i, c));
                std::int64_t row = id_sum_s_.get(key3(q, i, c));
                std::int64_t cand;
                if (neighbors)
                    cand = row - as + (c == self_c ? q : 0) + extra_sum[c];
                else
                    cand = as - (row - extra_sum[c]);
                if (cand < 1 || cand > p_->g.size() || cand == q) continue;
                Vertex b = static_cast<Vertex>(cand);
                if (!subset_.contains(b) || color_of(i, b) != c) continue;
                if (std::find(out.begin(), out.end(), b) != out.end()) continue;
                bool ok = neighbors ? (!p_->in_a[b] && p_->g.has_edge(q, b))
                                    : (p_->in_a[b] && !p_->g.has_edge(q, b));
                if (!ok) continue;
                out.push_back(b);
                if (static_cast<std::int64_t>(out.size()) == size) {
                    std::sort(out.begin(), out.end());
                    return true;
                }
            }
        }
        return false;
    }

    const PartitionedGraph* p_;
    int ell_;
    SubsetSpec subset_;
    std::uint64_t color_seed_;
    int width_;
    int colorings_;
    FlatMap count_s_;
    std::int64_t count_as_ = 0;
    FlatMap id_sum_s_;
    FlatMap id_sum_as_;
};

// Standalone neighbor-listing structure: one core over its own graph.
class NeighborLists {
public:
    NeighborLists(Vertex n, int ell, int d, std::uint64_t seed,
                  SubsetSpec s = SubsetSpec::everything())
        : p_(n), core_(&p_, ell, d, seed, s) {}

    const PartitionedGraph& partitioned() const { return p_; }
    const ColorCore& core() const { return core_; }
    int colorings() const { return core_.colorings(); }
    bool in_s(Vertex v) const { return core_.in_s(v); }

    // Applies side flips and edge toggles, then installs the fresh
    // certificate lists describing the new state.
    void batch_update(const std::vector<Vertex>& moved, const EdgeList& mods,
                      const EdgeList& non_edges_a, const EdgeList& edges_b) {
        apply_batch(p_, {&core_}, moved, mods, non_edges_a, edges_b);
    }

    // Shared batch application: mutate the graph/partition, notify every
    // core, validate and install the certificate lists.
    static void apply_batch(PartitionedGraph& p, const std::vector<ColorCore*>& cores,
                            const std::vector<Vertex>& moved, const EdgeList& mods,
                            const EdgeList& non_edges_a, const EdgeList& edges_b) {
        for (Vertex w : moved) {
            p.g.check_vertex(w);
            p.in_a[w] ^= 1;
            int sign = p.in_a[w] ? +1 : -1;
            for (ColorCore* c : cores) c->on_side_flip(w, sign);
        }
        for (auto [u, v] : mods) {
            bool present = p.g.toggle_edge(u, v);
            int sign = present ? +1 : -1;
            for (ColorCore* c : cores) c->on_edge(u, v, sign);
        }
        for (auto [u, v] : non_edges_a) {
            p.g.check_pair(u, v);
            if (!p.in_a[u] || !p.in_a[v] || p.g.has_edge(u, v))
                throw SizeMismatch("apply_batch: non_edges_a does not match state");
        }
        for (auto [u, v] : edges_b) {
            p.g.check_pair(u, v);
            if (p.in_a[u] || p.in_a[v] || !p.g.has_edge(u, v))
                throw SizeMismatch("apply_batch: edges_b does not match state");
        }
        p.non_edges_a = non_edges_a;
        p.edges_b = edges_b;
    }

    std::optional<std::vector<Vertex>> list_neighbors_bs(Vertex a) const {
        return core_.list_neighbors_bs(a);
    }

    std::optional<std::vector<Vertex>> list_non_neighbors_as(Vertex b) const {
        return core_.list_non_neighbors_as(b);
    }

    std::vector<Vertex> recovered_neighbors_bs(Vertex a, int use) const {
        return core_.recovered_neighbors_bs(a, use);
    }

private:
    PartitionedGraph p_;
    ColorCore core_;
};

} // namespace splitdyn

#endif
