#include "fubini/column_sets.hpp"

#include <algorithm>

namespace fubini {

ColumnSetIndex::ColumnSetIndex(int n, int k) : n_(n), k_(k) {
    if (k < 1 || k > n) throw DomainError("column index: need 1 <= k <= n");
    if (n > 24) throw DomainError("column index: n too large");
    by_mask_.assign(std::size_t{1} << n, -1);
    for (int h = 1; h <= k; ++h) {
        std::vector<std::uint32_t> level;
        for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
            if (std::popcount(m) == h) level.push_back(m);
        // Colex: compare as binary numbers, i.e. by largest differing element.
        std::sort(level.begin(), level.end());
        for (auto m : level) {
            PositionSet s;
            for (int j = 0; j < n; ++j)
                if (m >> j & 1U) s.push_back(j + 1);
            by_mask_[m] = static_cast<std::int32_t>(sets_.size());
            sets_.push_back(std::move(s));
            masks_.push_back(m);
        }
    }
}

std::size_t ColumnSetIndex::index_of(std::span<const int> set) const {
    std::uint32_t m = 0;
    for (int j : set) {
        if (j < 1 || j > n_) throw DomainError("column index: position out of range");
        m |= std::uint32_t{1} << (j - 1);
    }
    std::int32_t idx = by_mask_[m];
    if (idx < 0 || std::popcount(m) != static_cast<int>(set.size()))
        throw DomainError("column index: set not indexed (size outside [1,k] or repeated entries)");
    return static_cast<std::size_t>(idx);
}

} // namespace fubini
