#ifndef SPLITDYN_FLAT_MAP_HPP
#define SPLITDYN_FLAT_MAP_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

#include "splitdyn/rng.hpp"

namespace splitdyn {

// Minimal open-addressing map from uint64 keys to int64 counters.
// Keys are never removed; counters may return to zero and the slot stays.
// The accumulator tables are hot and large, so node-based maps are too
// heavy here.
class FlatMap {
public:
    static constexpr std::uint64_t kEmpty = ~0ULL;

    FlatMap() { rehash(16); }

    void add(std::uint64_t key, std::int64_t delta) {
        std::size_t i = slot(key);
        if (keys_[i] == kEmpty) {
            keys_[i] = key;
            vals_[i] = 0;
            ++size_;
            if (size_ * 3 >= keys_.size() * 2) {
                grow();
                i = slot(key);
            }
        }
        vals_[i] += delta;
    }

    std::int64_t get(std::uint64_t key) const {
        std::size_t i = slot(key);
        return keys_[i] == kEmpty ? 0 : vals_[i];
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < keys_.size(); ++i)
            if (keys_[i] != kEmpty && vals_[i] != 0) fn(keys_[i], vals_[i]);
    }

    std::size_t size() const { return size_; }

    void clear() {
        keys_.clear();
        vals_.clear();
        size_ = 0;
        rehash(16);
    }

private:
    std::size_t slot(std::uint64_t key) const {
        std::size_t mask = keys_.size() - 1;
        std::size_t i = static_cast<std::size_t>(mix64(key)) & mask;
        while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask;
        return i;
    }

    void rehash(std::size_t cap) {
        keys_.assign(cap, kEmpty);
        vals_.assign(cap, 0);
    }

    void grow() {
        std::vector<std::uint64_t> old_keys;
        std::vector<std::int64_t> old_vals;
        old_keys.swap(keys_);
        old_vals.swap(vals_);
        rehash(old_keys.size() * 2);
        size_ = 0;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] != kEmpty) {
                std::size_t j = slot(old_keys[i]);
                keys_[j] = old_keys[i];
                vals_[j] = old_vals[i];
                ++size_;
            }
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::int64_t> vals_;
    std::size_t size_ = 0;
};

} // namespace splitdyn

#endif
