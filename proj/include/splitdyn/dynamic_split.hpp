#ifndef SPLITDYN_DYNAMIC_SPLIT_HPP
#define SPLITDYN_DYNAMIC_SPLIT_HPP

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "splitdyn/degree_ladder.hpp"
#include "splitdyn/neighbor_lists.hpp"
#include "splitdyn/neighbor_sampler.hpp"

namespace splitdyn {

// Unconstrained dynamic graph front end. The ladder tracks the current
// graph G_t and its splittance exactly at all times. The listing and
// sampling structures hold the state G_s of the last step s at which
// splittance was <= k; while over budget, updates are only queued
// (vertices_upd = A_s symdiff A_t, edges_upd = E_s symdiff E_t), and on
// return to <= k everything is flushed in one batch together with freshly
// rebuilt certificate lists for G_t.
class DynamicSplitGraph {
public:
    DynamicSplitGraph(Vertex n, int k, int d, std::uint64_t seed)
        : n_(n), k_(k), d_(d), ladder_(n),
          nl_(n, std::max(k, 1), d + 3, derive_seed(seed, 1)),
          ns_(n, std::max(10 * k, 1), d, derive_seed(seed, 2)) {
        if (k < 0 || d < 1) throw InvalidSize("DynamicSplitGraph: bad parameters");
        checkpoint_period_ = static_cast<std::int64_t>(n) * n;
    }

    Vertex size() const { return n_; }
    int k() const { return k_; }
    int d() const { return d_; }
    std::int64_t splittance() const { return ladder_.splittance(); }
    bool in_a(Vertex v) const { return ladder_.in_a(v); }
    const Graph& graph() const { return ladder_.graph(); }

    void update(Vertex u, Vertex v) {
        auto moved = ladder_.update(u, v);
        for (Vertex w : moved) toggle_in(vertices_upd_, w);
        toggle_in(edges_upd_, canonical_edge(u, v));
        ++counter_;
        ++since_flush_;
        if (counter_ % checkpoint_period_ == 0) checkpoint_due_ = true;
        if (ladder_.splittance() <= k_) flush();
    }

    // The frozen certificate lists; equal to direct scans of G_t whenever
    // splittance(G_t) <= k, stale otherwise (no guarantee over budget).
    const EdgeList& list_non_edges_a() const { return non_edges_a_; }
    const EdgeList& list_edges_b() const { return edges_b_; }

    std::vector<Vertex> sample_edges(Vertex a) const { return ns_.sample_edges(a); }
    std::vector<Vertex> sample_non_edges(Vertex b) const {
        return ns_.sample_non_edges(b);
    }

    // Largest |A_s cap B_t| seen at a flush; tests assert it against the
    // O(sqrt(r+k)) crossing bound.
    double worst_crossing_slack() const { return worst_crossing_slack_; }

private:
    static void toggle_in(std::set<Vertex>& s, Vertex v) {
        if (!s.erase(v)) s.insert(v);
    }
    static void toggle_in(std::set<std::pair<Vertex, Vertex>>& s,
                          std::pair<Vertex, Vertex> e) {
        if (!s.erase(e)) s.insert(e);
    }

    void flush() {
        // split the moved vertices by direction (A_s -> B_t vs B_s -> A_t)
        std::vector<Vertex> now_b, now_a;
        for (Vertex w : vertices_upd_)
            (ladder_.in_a(w) ? now_a : now_b).push_back(w);

        EdgeList fresh_eb, fresh_nea;
        if (checkpoint_due_) {
            scan_lists(fresh_nea, fresh_eb);
            checkpoint_due_ = false;
        } else {
            double bound =
                std::sqrt(2.0 * (static_cast<double>(since_flush_) + 2.0 * k_)) + 1.0;
            if (static_cast<double>(now_b.size()) > bound)
                throw std::logic_error("flush: crossing set exceeds sqrt bound");
            worst_crossing_slack_ =
                std::max(worst_crossing_slack_, now_b.size() / bound);
            rebuild_edges_b(now_b, now_a, fresh_eb);
            rebuild_non_edges_a(now_b, now_a, fresh_nea);
        }
        std::sort(fresh_eb.begin(), fresh_eb.end());
        std::sort(fresh_nea.begin(), fresh_nea.end());

        std::vector<Vertex> moved(vertices_upd_.begin(), vertices_upd_.end());
        EdgeList mods(edges_upd_.begin(), edges_upd_.end());
        nl_.batch_update(moved, mods, fresh_nea, fresh_eb);
        ns_.batch_update(moved, mods, fresh_nea, fresh_eb);
        non_edges_a_ = fresh_nea;
        edges_b_ = fresh_eb;
        vertices_upd_.clear();
        edges_upd_.clear();
        since_flush_ = 0;
    }

    // Edges of G_t[B_t] from three sources: (1) pairs that were already
    // inside B and pairs touched by queued toggles, (2) pairs among the
    // vertices that just arrived in B, (3) for each arrival a, its
    // G_t-neighbors among the stayed-B vertices, listed by the color
    // structure on a temporarily patched graph.
    void rebuild_edges_b(const std::vector<Vertex>& now_b,
                         const std::vector<Vertex>& now_a, EdgeList& out) {
        const Graph& gt = ladder_.graph();
        std::set<std::pair<Vertex, Vertex>> found;
        auto consider = [&](Vertex x, Vertex y) {
            if (x == y) return;
            if (!ladder_.in_a(x) && !ladder_.in_a(y) && gt.has_edge(x, y))
                found.insert(canonical_edge(x, y));
        };
        for (auto [x, y] : edges_b_) consider(x, y);
        for (auto [x, y] : edges_upd_) consider(x, y);
        for (std::size_t i = 0; i < now_b.size(); ++i)
            for (std::size_t j = i + 1; j < now_b.size(); ++j)
                consider(now_b[i], now_b[j]);

        if (!now_b.empty()) {
            // patch nl to show each arrival its G_t edges into stayed-B,
            // with the B_s -> A_t strays cut so the list fits in ell = k
            EdgeList patch;
            std::set<Vertex> left_b(now_a.begin(), now_a.end());
            for (auto [x, y] : edges_upd_) {
                bool xb = is_now_b(x, now_b), yb = is_now_b(y, now_b);
                if (xb == yb) continue;
                Vertex other = xb ? y : x;
                if (!nl_.partitioned().in_a[other] && !left_b.count(other))
                    patch.push_back({x, y});
            }
            for (Vertex a : now_b)
                for (Vertex w : now_a)
                    if (nl_.partitioned().g.has_edge(a, w)) patch.push_back({a, w});
            nl_.batch_update({}, patch, non_edges_a_, edges_b_);
            for (Vertex a : now_b) {
                auto got = nl_.list_neighbors_bs(a);
                if (!got)
                    throw std::logic_error("flush: patched neighbor list over ell");
                for (Vertex y : *got)
                    if (!left_b.count(y)) found.insert(canonical_edge(a, y));
            }
            nl_.batch_update({}, patch, non_edges_a_, edges_b_);
        }
        out.assign(found.begin(), found.end());
    }

    // Mirror image for the non-edges of G_t[A_t].
    void rebuild_non_edges_a(const std::vector<Vertex>& now_b,
                             const std::vector<Vertex>& now_a, EdgeList& out) {
        const Graph& gt = ladder_.graph();
        std::set<std::pair<Vertex, Vertex>> found;
        auto consider = [&](Vertex x, Vertex y) {
            if (x == y) return;
            if (ladder_.in_a(x) && ladder_.in_a(y) && !gt.has_edge(x, y))
                found.insert(canonical_edge(x, y));
        };
        for (auto [x, y] : non_edges_a_) consider(x, y);
        for (auto [x, y] : edges_upd_) consider(x, y);
        for (std::size_t i = 0; i < now_a.size(); ++i)
            for (std::size_t j = i + 1; j < now_a.size(); ++j)
                consider(now_a[i], now_a[j]);

        if (!now_a.empty()) {
            // patch nl so each arrival into A sees its G_t non-edges into
            // stayed-A, with the A_s -> B_t strays bridged over
            EdgeList patch;
            std::set<Vertex> left_a(now_b.begin(), now_b.end());
            for (auto [x, y] : edges_upd_) {
                bool xa = is_now_a(x, now_a), ya = is_now_a(y, now_a);
                if (xa == ya) continue;
                Vertex other = xa ? y : x;
                if (nl_.partitioned().in_a[other] && !left_a.count(other))
                    patch.push_back({x, y});
            }
            for (Vertex b : now_a)
                for (Vertex w : now_b)
                    if (!nl_.partitioned().g.has_edge(b, w)) patch.push_back({b, w});
            nl_.batch_update({}, patch, non_edges_a_, edges_b_);
            for (Vertex b : now_a) {
                auto got = nl_.list_non_neighbors_as(b);
                if (!got)
                    throw std::logic_error("flush: patched non-neighbor list over ell");
                for (Vertex y : *got)
                    if (!left_a.count(y)) found.insert(canonical_edge(b, y));
            }
            nl_.batch_update({}, patch, non_edges_a_, edges_b_);
        }
        out.assign(found.begin(), found.end());
    }

    bool is_now_b(Vertex v, const std::vector<Vertex>& now_b) const {
        return std::find(now_b.begin(), now_b.end(), v) != now_b.end();
    }
    bool is_now_a(Vertex v, const std::vector<Vertex>& now_a) const {
        return std::find(now_a.begin(), now_a.end(), v) != now_a.end();
    }

    // Checkpoint path: certificates from direct scans of G_t.
    void scan_lists(EdgeList& nea, EdgeList& eb) const {
        const Graph& gt = ladder_.graph();
        std::vector<Vertex> a_side;
        for (Vertex v = 1; v <= n_; ++v) {
            if (ladder_.in_a(v)) {
                a_side.push_back(v);
                continue;
            }
            for (Vertex u : gt.neighbors(v))
                if (u > v && !ladder_.in_a(u)) eb.push_back({v, u});
        }
        for (std::size_t i = 0; i < a_side.size(); ++i)
            for (std::size_t j = i + 1; j < a_side.size(); ++j)
                if (!gt.has_edge(a_side[i], a_side[j]))
                    nea.push_back({a_side[i], a_side[j]});
    }

    Vertex n_;
    int k_, d_;
    DegreeLadder ladder_;
    NeighborLists nl_;
    NeighborSampler ns_;
    std::set<Vertex> vertices_upd_;
    std::set<std::pair<Vertex, Vertex>> edges_upd_;
    EdgeList non_edges_a_, edges_b_;
    std::int64_t counter_ = 0;
    std::int64_t since_flush_ = 0;
    std::int64_t checkpoint_period_;
    bool checkpoint_due_ = false;
    double worst_crossing_slack_ = 0.0;
};

} // namespace splitdyn

#endif
