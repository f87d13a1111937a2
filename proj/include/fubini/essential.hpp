#ifndef FUBINI_ESSENTIAL_HPP
#define FUBINI_ESSENTIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "fubini/exact_linalg.hpp"
#include "fubini/flag_minors.hpp"

namespace fubini {

/// (row, column) in matrix coordinates, 1-based.
struct GridCell {
    int row;
    int col;
    friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

/// Sorted cell set.
using Diagram = std::vector<GridCell>;

/// D(p) = {(p_j, i) : i < j, p_i > p_j}.
Diagram rothe_diagram(const Permutation& p);
/// Cells of D(p) with neither (r+1, c) nor (r, c+1) in D(p).
Diagram essential_cells(const Permutation& p);
Diagram essential_cells(const Diagram& d);
/// Rothe diagram of std(conv(w)); every cell lies in rows <= k.
Diagram fubini_diagram(const FubiniWord& w);

/// Rank condition: the top h rows on columns beta have rank at most r.
struct EssentialTriple {
    int h;
    int beta_index; ///< beta = beta_{beta_index}(w)
    PositionSet beta;
    int rank;
    friend bool operator==(const EssentialTriple&, const EssentialTriple&) = default;
};

struct RankedEssentialSet {
    std::vector<EssentialTriple> triples;
    /// Essential cells (h, c) of std(conv(w)) with no i such that |beta_i| = c.
    /// Expected to stay empty; reported, never silently dropped.
    std::vector<GridCell> unmatched;
};

RankedEssentialSet ranked_essential_set(const FubiniWord& w);

/// Throws DomainError unless A has full row rank and no zero column.
void require_spanning(const RationalMatrix& a);

/// Memoizes exact ranks of top-row blocks A[[h], cols] of one matrix.
class TopRankCache {
public:
    explicit TopRankCache(const RationalMatrix& a) : a_(a) {}
    int rank(int h, std::span<const int> cols);
    [[nodiscard]] const RationalMatrix& matrix() const { return a_; }

private:
    const RationalMatrix& a_;
    std::map<std::pair<int, std::uint64_t>, int> memo_;
};

/// Bit i set when the flag minor on index.at(i) vanishes on A.
Bitset vanishing_flag_minors(const RationalMatrix& a, const ColumnSetIndex& index);

/// Every flag minor indexed by T_w vanishes on A.
bool member_closure_flags(const RationalMatrix& a, const FubiniWord& w);
bool member_closure_flags(const Bitset& vanishing, const FlagClassification& w);
/// Every rank condition of Ess*(w) holds on A.
bool member_closure_ess(const RationalMatrix& a, const FubiniWord& w);
bool member_closure_ess(TopRankCache& a, const RankedEssentialSet& ess);

/// Order test through ranked essential sets.
bool medium_leq_ess(const FubiniWord& v, const FubiniWord& w);
bool medium_leq_ess(const RankedEssentialSet& v, const RankedEssentialSet& w);

/// A = unitriangular * reduced * scaling, with reduced fitting P_word.
struct Decomposition {
    FubiniWord word;
    RationalMatrix reduced;
    RationalMatrix unitriangular;
    RationalMatrix scaling;
};

Decomposition decompose(const RationalMatrix& a);

} // namespace fubini

#endif
