#ifndef FUBINI_COLUMN_SETS_HPP
#define FUBINI_COLUMN_SETS_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "fubini/word.hpp"

namespace fubini {

/// Fixed-size bitset packed into 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    [[nodiscard]] std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    [[nodiscard]] bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    [[nodiscard]] bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }
    Bitset& operator|=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& other) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    /// Calls f(i) for each set bit in increasing order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Enumerates every J subset of [n] with 1 <= |J| <= k, ordered by size and
/// then colex. Supports n <= 24.
class ColumnSetIndex {
public:
    ColumnSetIndex(int n, int k);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] std::size_t size() const { return sets_.size(); }
    /// Sorted 1-based positions.
    [[nodiscard]] const PositionSet& at(std::size_t index) const { return sets_[index]; }
    [[nodiscard]] std::size_t index_of(std::span<const int> set) const;
    [[nodiscard]] std::uint32_t mask(std::size_t index) const { return masks_[index]; }

private:
    int n_;
    int k_;
    std::vector<PositionSet> sets_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::int32_t> by_mask_;
};

} // namespace fubini

#endif
