#ifndef SPLITDYN_OBSTRUCTION_FINDER_HPP
#define SPLITDYN_OBSTRUCTION_FINDER_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "splitdyn/dynamic_split.hpp"

namespace splitdyn {

// Outcome of the pairwise subroutine: either a witnessing obstruction, or
// a certified small (<= 3*sqrt(k)) cross-neighborhood of one of the two
// query vertices, or a miss (a low-probability counting failure; callers
// skip to the next candidate).
struct SubResult {
    enum Kind { Obstr, Small, Miss } kind = Miss;
    std::vector<Vertex> obstruction; // Obstr
    Vertex owner = 0;                // Small: whose neighborhood
    std::vector<Vertex> small;       // Small: the certified set
};

// Locates an induced 2K2, C4 or C5, or certifies the graph split.
// Guarantees hold when splittance <= k. Every candidate vertex set is
// verified against the real graph before being returned, so a reported
// obstruction is always genuine; only completeness is probabilistic.
//
// The case analysis works on a SideView: either the graph as-is or its
// complement with the partition sides swapped. Under the complement view
// the primitive queries exchange roles (non-edges in A <-> edges in B,
// neighbor sampling <-> non-neighbor sampling), which halves the case
// work: C4 localization is 2K2 localization on the complement, and the
// second half of the C5 cases mirrors the first.
class ObstructionFinder {
public:
    explicit ObstructionFinder(const DynamicSplitGraph& w)
        : w_(w), small_cap_(static_cast<int>(std::ceil(3.0 * std::sqrt(
                     static_cast<double>(std::max(w.k(), 1)))))),
          sample_cap_(10 * std::max(w.k(), 1)) {}

    // nullopt means Split.
    std::optional<Obstruction> find() {
        if (w_.splittance() == 0) return std::nullopt;
        sample_cache_.clear();
        sub_cache_.clear();
        for (bool comp : {false, true}) {
            if (auto u = two_k2_cases(comp)) return u;
        }
        for (bool comp : {false, true}) {
            if (auto u = c5_cases(comp)) return u;
        }
        return std::nullopt;
    }

    // Exposed for validation; pre: a1, a2 on the A side of the view and
    // non-adjacent in the view.
    SubResult sub1(bool comp, Vertex a1, Vertex a2) {
        auto key = std::make_tuple(comp, std::min(a1, a2), std::max(a1, a2));
        auto it = sub_cache_.find(key);
        if (it != sub_cache_.end()) return it->second;
        SubResult r = sub1_impl(comp, a1, a2);
        sub_cache_[key] = r;
        return r;
    }

    // pre: b1, b2 on the B side of the view and adjacent in the view.
    SubResult sub2(bool comp, Vertex b1, Vertex b2) { return sub1(!comp, b1, b2); }

private:
    // --- view primitives -------------------------------------------------
    bool view_in_a(bool comp, Vertex v) const { return comp ? !w_.in_a(v) : w_.in_a(v); }
    bool view_adj(bool comp, Vertex u, Vertex v) const {
        if (u == v) return false;
        bool e = w_.graph().has_edge(u, v);
        return comp ? !e : e;
    }
    const EdgeList& view_non_edges_a(bool comp) const {
        return comp ? w_.list_edges_b() : w_.list_non_edges_a();
    }
    const EdgeList& view_edges_b(bool comp) const {
        return comp ? w_.list_non_edges_a() : w_.list_edges_b();
    }
    const std::vector<Vertex>& view_sample_edges(bool comp, Vertex a) {
        auto key = std::make_pair(comp, a);
        auto it = sample_cache_.find(key);
        if (it != sample_cache_.end()) return it->second;
        auto got = comp ? w_.sample_non_edges(a) : w_.sample_edges(a);
        return sample_cache_.emplace(key, std::move(got)).first->second;
    }

    // --- verification ----------------------------------------------------
    std::optional<Obstruction> verify(std::vector<Vertex> u) const {
        std::sort(u.begin(), u.end());
        if (std::adjacent_find(u.begin(), u.end()) != u.end()) return std::nullopt;
        auto kind = classify_obstruction(w_.graph(), u);
        if (!kind) return std::nullopt;
        return Obstruction{*kind, u};
    }

    // --- the pairwise subroutine -----------------------------------------
    SubResult sub1_impl(bool comp, Vertex a1, Vertex a2) {
        const auto& s1 = view_sample_edges(comp, a1);
        const auto& s2 = view_sample_edges(comp, a2);
        auto small_of = [&](Vertex a, const std::vector<Vertex>& s) -> SubResult {
            SubResult r;
            r.kind = SubResult::Small;
            r.owner = a;
            r.small = s;
            return r;
        };
        // an exhaustive sample that is small settles its owner's case
        if (static_cast<int>(s1.size()) < sample_cap_ &&
            static_cast<int>(s1.size()) <= small_cap_)
            return small_of(a1, s1);
        if (static_cast<int>(s2.size()) < sample_cap_ &&
            static_cast<int>(s2.size()) <= small_cap_)
            return small_of(a2, s2);
        // otherwise a C4 (common neighbors, themselves non-adjacent) or a
        // 2K2 (exclusive neighbors, non-adjacent) must exist among samples
        for (Vertex b : s1)
            for (Vertex bp : s2) {
                if (b == bp || view_adj(comp, b, bp)) continue;
                bool b_both = view_adj(comp, a2, b);
                bool bp_both = view_adj(comp, a1, bp);
                std::optional<Obstruction> got;
                if (b_both && bp_both)
                    got = verify({a1, a2, b, bp}); // C4 in the view
                else if (!b_both && !bp_both)
                    got = verify({a1, b, a2, bp}); // 2K2 in the view
                if (got) {
                    SubResult r;
                    r.kind = SubResult::Obstr;
                    r.obstruction = got->vertices;
                    return r;
                }
            }
        return SubResult{};
    }

    // --- 2K2 / C4 localization -------------------------------------------
    std::optional<Obstruction> two_k2_cases(bool comp) {
        const EdgeList& nea = view_non_edges_a(comp);
        const EdgeList& eb = view_edges_b(comp);

        // (a) all four vertices in A: two disjoint listed non-edges
        for (std::size_t i = 0; i < nea.size(); ++i)
            for (std::size_t j = i + 1; j < nea.size(); ++j) {
                auto [x, t] = nea[i];
                auto [y, z] = nea[j];
                if (auto u = verify({x, t, y, z})) return u;
            }

        // (b) three in A: non-edges xz, yz share z; find t' adjacent to z
        // but neither x nor y
        for (std::size_t i = 0; i < nea.size(); ++i)
            for (std::size_t j = 0; j < nea.size(); ++j) {
                if (i == j) continue;
                for (auto [z, x] : {nea[i], std::make_pair(nea[i].second, nea[i].first)}) {
                    Vertex y = 0;
                    if (nea[j].first == z)
                        y = nea[j].second;
                    else if (nea[j].second == z)
                        y = nea[j].first;
                    if (y == 0 || y == x) continue;
                    if (auto u = complete_2k2_triple(comp, x, y, z)) return u;
                }
            }

        // (c) adjacent pair in A: anchor on a listed B-edge, shrink via sub2
        for (auto [z, t] : eb) {
            SubResult r = sub2(comp, z, t);
            if (r.kind == SubResult::Obstr) return verify(r.obstruction);
            if (r.kind != SubResult::Small) continue;
            for (std::size_t i = 0; i < r.small.size(); ++i)
                for (std::size_t j = i + 1; j < r.small.size(); ++j)
                    if (auto u = verify({r.small[i], r.small[j], z, t})) return u;
        }

        // (d) non-adjacent pair in A: anchor on a listed A-non-edge
        for (auto e : nea) {
            SubResult r = sub1(comp, e.first, e.second);
            if (r.kind == SubResult::Obstr) return verify(r.obstruction);
            if (r.kind != SubResult::Small) continue;
            Vertex p = r.owner, q = p == e.first ? e.second : e.first;
            for (Vertex y : r.small) {
                if (view_adj(comp, y, q)) continue;
                for (Vertex tp : view_sample_edges(comp, q)) {
                    if (view_adj(comp, tp, p) || view_adj(comp, tp, y)) continue;
                    if (auto u = verify({p, y, q, tp})) return u;
                }
            }
        }

        // (e) one vertex in A: anchor on a listed B-edge xy, candidates for
        // t from the small non-neighborhood, then sample around t
        for (auto [x, y] : eb) {
            SubResult r = sub2(comp, x, y);
            if (r.kind == SubResult::Obstr) return verify(r.obstruction);
            if (r.kind != SubResult::Small) continue;
            for (Vertex t : r.small) {
                if (view_adj(comp, t, x) || view_adj(comp, t, y)) continue;
                for (Vertex zp : view_sample_edges(comp, t)) {
                    if (view_adj(comp, zp, x) || view_adj(comp, zp, y)) continue;
                    if (auto u = verify({x, y, zp, t})) return u;
                }
            }
        }

        // (f) no vertex in A: two disjoint listed B-edges
        for (std::size_t i = 0; i < eb.size(); ++i)
            for (std::size_t j = i + 1; j < eb.size(); ++j)
                if (auto u = verify(
                        {eb[i].first, eb[i].second, eb[j].first, eb[j].second}))
                    return u;

        return std::nullopt;
    }

    std::optional<Obstruction> complete_2k2_triple(bool comp, Vertex x, Vertex y,
                                                   Vertex z) {
        const auto& sz = view_sample_edges(comp, z);
        for (Vertex tp : sz) {
            if (view_adj(comp, tp, x) || view_adj(comp, tp, y)) continue;
            if (auto u = verify({x, y, z, tp})) return u;
        }
        if (static_cast<int>(sz.size()) == sample_cap_) {
            for (Vertex a : {x, y}) {
                if (view_adj(comp, a, z)) continue;
                SubResult r = sub1(comp, a, z);
                if (r.kind == SubResult::Obstr) return verify(r.obstruction);
            }
        }
        return std::nullopt;
    }

    // --- C5 localization --------------------------------------------------
    // Cases (a)-(d); (e)-(h) are the same cases on the complement view.
    std::optional<Obstruction> c5_cases(bool comp) {
        const EdgeList& nea = view_non_edges_a(comp);
        const EdgeList& eb = view_edges_b(comp);

        // (a) all five in A: every vertex covered by listed non-edges
        {
            std::vector<Vertex> pts;
            for (auto [u, v] : nea) {
                pts.push_back(u);
                pts.push_back(v);
            }
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            std::size_t m = pts.size();
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = a + 1; b < m; ++b)
                    for (std::size_t c = b + 1; c < m; ++c)
                        for (std::size_t d = c + 1; d < m; ++d)
                            for (std::size_t e = d + 1; e < m; ++e)
                                if (auto u = verify({pts[a], pts[b], pts[c], pts[d],
                                                     pts[e]}))
                                    return u;
        }

        // (b) four in A: disjoint non-edges xz, yt; w completes the cycle
        for (std::size_t i = 0; i < nea.size(); ++i)
            for (std::size_t j = 0; j < nea.size(); ++j) {
                if (i == j) continue;
                for (auto [x, z] : {nea[i], std::make_pair(nea[i].second, nea[i].first)})
                for (auto [y, t] : {nea[j], std::make_pair(nea[j].second, nea[j].first)}) {
                    if (y == x || y == z || t == x || t == z) continue;
                    if (view_adj(comp, x, t)) continue;
                    SubResult r = sub1(comp, x, t);
                    if (r.kind == SubResult::Obstr) return verify(r.obstruction);
                    if (r.kind != SubResult::Small) continue;
                    for (Vertex w : r.small) {
                        if (!view_adj(comp, w, x) || !view_adj(comp, w, t)) continue;
                        if (auto u = verify({x, y, z, t, w})) return u;
                    }
                }
            }

        // (c) three in A with the B-pair adjacent: anchor non-edge xz and
        // B-edge tw, find middle vertex y via sub2
        for (auto ne : nea)
            for (auto be : eb) {
                SubResult r = sub2(comp, be.first, be.second);
                if (r.kind == SubResult::Obstr) return verify(r.obstruction);
                if (r.kind != SubResult::Small) continue;
                for (auto [x, z] : {ne, std::make_pair(ne.second, ne.first)})
                    for (auto [t, w] : {be, std::make_pair(be.second, be.first)})
                        for (Vertex y : r.small) {
                            if (y == x || y == z) continue;
                            if (view_adj(comp, y, t) || view_adj(comp, y, w)) continue;
                            if (auto u = verify({x, y, z, t, w})) return u;
                        }
            }

        // (d) three in A with the B-pair non-adjacent: non-edges yt, yw
        // share y; x and z come from small neighborhoods via sub1
        for (std::size_t i = 0; i < nea.size(); ++i)
            for (std::size_t j = 0; j < nea.size(); ++j) {
                if (i == j) continue;
                for (auto [y, t] : {nea[i], std::make_pair(nea[i].second, nea[i].first)}) {
                    Vertex w = 0;
                    if (nea[j].first == y)
                        w = nea[j].second;
                    else if (nea[j].second == y)
                        w = nea[j].first;
                    if (w == 0 || w == t) continue;
                    if (!view_adj(comp, t, w)) continue;
                    SubResult rw = sub1(comp, y, w);
                    if (rw.kind == SubResult::Obstr) return verify(rw.obstruction);
                    SubResult rt = sub1(comp, y, t);
                    if (rt.kind == SubResult::Obstr) return verify(rt.obstruction);
                    if (rw.kind != SubResult::Small || rt.kind != SubResult::Small)
                        continue;
                    for (Vertex x : rw.small) {
                        if (!view_adj(comp, x, y) || !view_adj(comp, x, w)) continue;
                        for (Vertex z : rt.small) {
                            if (z == x) continue;
                            if (!view_adj(comp, z, y) || !view_adj(comp, z, t)) continue;
                            if (auto u = verify({x, y, z, t, w})) return u;
                        }
                    }
                }
            }

        return std::nullopt;
    }

    const DynamicSplitGraph& w_;
    int small_cap_;
    int sample_cap_;
    std::map<std::pair<bool, Vertex>, std::vector<Vertex>> sample_cache_;
    std::map<std::tuple<bool, Vertex, Vertex>, SubResult> sub_cache_;
};

inline std::optional<Obstruction> find_obstruction(const DynamicSplitGraph& w) {
    ObstructionFinder f(w);
    try {
        return f.find();
    } catch (const SamplingFailed&) {
        return std::nullopt;
    }
}

} // namespace splitdyn

#endif
