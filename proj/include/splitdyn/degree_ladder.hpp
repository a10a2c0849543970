#ifndef SPLITDYN_DEGREE_LADDER_HPP
#define SPLITDYN_DEGREE_LADDER_HPP

#include <cstdlib>
#include <set>
#include <vector>

#include "splitdyn/graph.hpp"

namespace splitdyn {

// Maintains splittance(G) and a witnessing partition (A, B) under single
// edge toggles, moving O(1) vertices per update.
//
// The ladder keeps the degree sequence d_1 >= ... >= d_n as positions
// 1..n; equal-degree runs are contiguous blocks whose endpoints are
// tracked per degree value, so a +-1 degree change is a single swap with a
// block boundary. A is the ladder prefix of length m, where m is the
// largest index with d_i >= i (the largest prefix that is a near-clique;
// using the strict form rather than d_i >= i-1 keeps A empty on the
// edgeless graph while certifying the same optimum, since boundary
// vertices with d_i = i-1 can sit on either side at no cost).
class DegreeLadder {
public:
    explicit DegreeLadder(Vertex n)
        : g_(n),
          pos_(static_cast<std::size_t>(n) + 1),
          vert_(static_cast<std::size_t>(n) + 1),
          degv_(static_cast<std::size_t>(n) + 1, 0),
          first_pos_(static_cast<std::size_t>(n) + 1, 0),
          last_pos_(static_cast<std::size_t>(n) + 1, 0),
          side_a_(static_cast<std::size_t>(n) + 1, 0) {
        for (Vertex v = 1; v <= n; ++v) {
            pos_[v] = v;
            vert_[v] = v;
        }
        first_pos_[0] = 1;
        last_pos_[0] = n;
    }

    // Toggles {u,v} and returns the set of vertices that changed side.
    std::vector<Vertex> update(Vertex u, Vertex v) {
        bool inserted = g_.toggle_edge(u, v);
        moved_.clear();
        int delta = inserted ? +1 : -1;
        apply_degree_change(u, delta);
        apply_degree_change(v, delta);
        recompute_m();
        std::int64_t total = 2 * g_.edge_count();
        std::int64_t raw =
            static_cast<std::int64_t>(m_) * (m_ - 1) - prefix_sum_ + (total - prefix_sum_);
        if (raw < 0 || raw % 2 != 0)
            throw std::logic_error("DegreeLadder: splittance formula parity violated");
        splittance_ = raw / 2;
        if (moved_.size() > kMovedCap)
            throw std::logic_error("DegreeLadder: moved set exceeded cap");
        return std::vector<Vertex>(moved_.begin(), moved_.end());
    }

    std::int64_t splittance() const { return splittance_; }
    int threshold() const { return m_; }
    bool in_a(Vertex v) const { return side_a_[v] != 0; }
    const Graph& graph() const { return g_; }

    std::pair<std::vector<Vertex>, std::vector<Vertex>> partition() const {
        std::vector<Vertex> a, b;
        for (Vertex v = 1; v <= g_.size(); ++v) (in_a(v) ? a : b).push_back(v);
        return {a, b};
    }

private:
    static constexpr int kWindow = 3;
    static constexpr std::size_t kMovedCap = 8;

    int ladder_deg(int p) const { return degv_[vert_[p]]; }

    void flip_if_crossed(Vertex v) {
        char s = pos_[v] <= m_ ? 1 : 0;
        if (s != side_a_[v]) {
            side_a_[v] = s;
            auto it = moved_.find(v);
            if (it != moved_.end())
                moved_.erase(it);
            else
                moved_.insert(v);
        }
    }

    void swap_positions(int p, int q) {
        if (p == q) return;
        Vertex a = vert_[p], b = vert_[q];
        vert_[p] = b;
        vert_[q] = a;
        pos_[a] = q;
        pos_[b] = p;
        flip_if_crossed(a);
        flip_if_crossed(b);
    }

    void apply_degree_change(Vertex w, int delta) {
        int d = degv_[w];
        int p = pos_[w];
        if (delta > 0) {
            int q = first_pos_[d];
            swap_positions(p, q);
            if (first_pos_[d] == last_pos_[d])
                first_pos_[d] = last_pos_[d] = 0;
            else
                first_pos_[d] = q + 1;
            if (first_pos_[d + 1] == 0) first_pos_[d + 1] = q;
            last_pos_[d + 1] = q;
            degv_[w] = d + 1;
            if (q <= m_) prefix_sum_ += 1;
        } else {
            int q = last_pos_[d];
            swap_positions(p, q);
            if (first_pos_[d] == last_pos_[d])
                first_pos_[d] = last_pos_[d] = 0;
            else
                last_pos_[d] = q - 1;
            if (last_pos_[d - 1] == 0) last_pos_[d - 1] = q;
            first_pos_[d - 1] = q;
            degv_[w] = d - 1;
            if (q <= m_) prefix_sum_ -= 1;
        }
    }

    // After two +-1 degree changes the threshold moves by O(1); scan the
    // surrounding window and fail loudly if it would not, rather than
    // silently producing a wrong partition.
    void recompute_m() {
        int old_m = m_;
        int n = g_.size();
        while (m_ < n && ladder_deg(m_ + 1) >= m_ + 1) {
            ++m_;
            prefix_sum_ += ladder_deg(m_);
            flip_if_crossed(vert_[m_]);
        }
        while (m_ > 0 && ladder_deg(m_) < m_) {
            Vertex v = vert_[m_];
            prefix_sum_ -= degv_[v];
            --m_;
            flip_if_crossed(v);
        }
        if (std::abs(m_ - old_m) > kWindow)
            throw std::logic_error("DegreeLadder: threshold moved outside window");
    }

    Graph g_;
    std::vector<int> pos_, vert_, degv_;
    std::vector<int> first_pos_, last_pos_;
    std::vector<char> side_a_;
    std::set<Vertex> moved_;
    int m_ = 0;
    std::int64_t prefix_sum_ = 0;
    std::int64_t splittance_ = 0;
};

} // namespace splitdyn

#endif
