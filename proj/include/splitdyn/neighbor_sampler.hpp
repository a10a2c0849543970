#ifndef SPLITDYN_NEIGHBOR_SAMPLER_HPP
#define SPLITDYN_NEIGHBOR_SAMPLER_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "splitdyn/neighbor_lists.hpp"

namespace splitdyn {

// Samples min(ell, |N(a) cap B|) cross-partition neighbors (and the
// mirrored non-neighbor query). One global listing core of width 72*ell
// answers small neighborhoods exactly; larger ones are caught by random
// vertex layers V_{i,j} (inclusion probability 2^-i, d*log2(n) draws per
// level), one of which lands in the decodable size window with high
// probability. All cores share one graph; a query never scans adjacency.
class NeighborSampler {
public:
    NeighborSampler(Vertex n, int ell, int d, std::uint64_t seed)
        : p_(n), ell_(std::max(ell, 1)), levels_(ceil_log2(n)),
          per_level_(std::max(d, 1) * ceil_log2(n)) {
        int wide = 72 * ell_;
        std::uint64_t member_seed = derive_seed(seed, 0x6d656d62ULL);
        global_ = std::make_unique<ColorCore>(&p_, wide, d, derive_seed(seed, 0),
                                              SubsetSpec::everything());
        layers_.reserve(static_cast<std::size_t>(levels_) * per_level_);
        for (int i = 1; i <= levels_; ++i)
            for (int j = 0; j < per_level_; ++j) {
                std::uint64_t salt = (static_cast<std::uint64_t>(i) << 32) | j;
                layers_.push_back(std::make_unique<ColorCore>(
                    &p_, wide, d, derive_seed(seed, salt + 1),
                    SubsetSpec::sampled(member_seed, salt, i)));
            }
    }

    const PartitionedGraph& partitioned() const { return p_; }
    int ell() const { return ell_; }
    int levels() const { return levels_; }
    int per_level() const { return per_level_; }
    const ColorCore& global_core() const { return *global_; }
    const ColorCore& layer_core(int i, int j) const {
        return *layers_[static_cast<std::size_t>(i - 1) * per_level_ + j];
    }

    void batch_update(const std::vector<Vertex>& moved, const EdgeList& mods,
                      const EdgeList& non_edges_a, const EdgeList& edges_b) {
        std::vector<ColorCore*> cores;
        cores.reserve(layers_.size() + 1);
        cores.push_back(global_.get());
        for (auto& c : layers_) cores.push_back(c.get());
        NeighborLists::apply_batch(p_, cores, moved, mods, non_edges_a, edges_b);
    }

    // min(ell, |N(a) cap B|) verified neighbors, smallest ids first.
    std::vector<Vertex> sample_edges(Vertex a) const { return sample(a, true); }

    // min(ell, |A \ N(b)|) verified non-neighbors.
    std::vector<Vertex> sample_non_edges(Vertex b) const { return sample(b, false); }

private:
    std::vector<Vertex> sample(Vertex q, bool neighbors) const {
        p_.g.check_vertex(q);
        if (neighbors && !p_.in_a[q]) throw WrongSide("sample_edges: vertex not in A");
        if (!neighbors && p_.in_a[q])
            throw WrongSide("sample_non_edges: vertex not in B");
        auto whole = neighbors ? global_->list_neighbors_bs(q)
                               : global_->list_non_neighbors_as(q);
        if (whole) {
            if (static_cast<int>(whole->size()) > ell_) whole->resize(ell_);
            return *whole;
        }
        // oversized: find a layer whose restriction is in the decodable
        // window; exact per-layer sizes are cheap, decoding is not.
        for (const auto& layer : layers_) {
            std::int64_t size = neighbors ? layer->neighbors_bs_size(q)
                                          : layer->non_neighbors_as_size(q);
            if (size < ell_ || size > layer->ell()) continue;
            try {
                auto got = neighbors ? layer->list_neighbors_bs(q)
                                     : layer->list_non_neighbors_as(q);
                if (got && static_cast<int>(got->size()) >= ell_) {
                    got->resize(ell_);
                    return *got;
                }
            } catch (const SamplingFailed&) {
                // this layer missed; the next qualifying one may not
            }
        }
        throw SamplingFailed("NeighborSampler: no layer produced enough vertices");
    }

    PartitionedGraph p_;
    int ell_;
    int levels_;
    int per_level_;
    std::unique_ptr<ColorCore> global_;
    std::vector<std::unique_ptr<ColorCore>> layers_;
};

} // namespace splitdyn

#endif
