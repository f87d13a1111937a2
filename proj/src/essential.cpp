#include "fubini/essential.hpp"

#include <algorithm>
#include <set>

namespace fubini {

Diagram rothe_diagram(const Permutation& p) {
    Diagram d;
    for (int j = 1; j <= p.size(); ++j)
        for (int i = 1; i < j; ++i)
            if (p(i) > p(j)) d.push_back({p(j), i});
    std::sort(d.begin(), d.end());
    return d;
}

Diagram essential_cells(const Diagram& d) {
    std::set<GridCell> cells(d.begin(), d.end());
    Diagram ess;
    for (const auto& c : d)
        if (!cells.count({c.row + 1, c.col}) && !cells.count({c.row, c.col + 1})) ess.push_back(c);
    return ess;
}

Diagram essential_cells(const Permutation& p) { return essential_cells(rothe_diagram(p)); }

Diagram fubini_diagram(const FubiniWord& w) {
    Diagram d = rothe_diagram(standardize(convexify(w)));
    for (const auto& c : d)
        if (c.row > w.k())
            throw InternalError("fubini_diagram: cell below row k for " + w.to_string());
    return d;
}

RankedEssentialSet ranked_essential_set(const FubiniWord& w) {
    RankedEssentialSet out;
    std::vector<PositionSet> beta = beta_chain(w);
    PatternMatrix p(w);
    for (const auto& cell : essential_cells(fubini_diagram(w))) {
        auto it = std::find_if(beta.begin(), beta.end(),
                               [&](const PositionSet& b) { return static_cast<int>(b.size()) == cell.col; });
        if (it == beta.end()) {
            out.unmatched.push_back(cell);
            continue;
        }
        int i = static_cast<int>(it - beta.begin()) + 1;
        out.triples.push_back({cell.row, i, *it, generic_rank_prefix(p, cell.row, *it)});
    }
    return out;
}

void require_spanning(const RationalMatrix& a) {
    if (a.has_zero_column()) throw DomainError("matrix has a zero column");
    if (rank(a) != a.rows()) throw DomainError("matrix does not have full row rank");
}

int TopRankCache::rank(int h, std::span<const int> cols) {
    std::uint64_t mask = 0;
    for (int c : cols) mask |= std::uint64_t{1} << (c - 1);
    auto key = std::make_pair(h, mask);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<int> rows(static_cast<std::size_t>(h));
    for (int r = 1; r <= h; ++r) rows[static_cast<std::size_t>(r - 1)] = r;
    int value = fubini::rank(a_, rows, cols);
    memo_.emplace(key, value);
    return value;
}

Bitset vanishing_flag_minors(const RationalMatrix& a, const ColumnSetIndex& index) {
    if (a.rows() != index.k() || a.cols() != index.n()) throw DomainError("vanishing_flag_minors: shape mismatch");
    Bitset zero(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) {
        const PositionSet& cols = index.at(i);
        std::vector<int> rows(cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = static_cast<int>(r) + 1;
        if (sgn(det(a.submatrix(rows, cols))) == 0) zero.set(i);
    }
    return zero;
}

bool member_closure_flags(const Bitset& vanishing, const FlagClassification& w) {
    return w.truly().is_subset_of(vanishing);
}

bool member_closure_flags(const RationalMatrix& a, const FubiniWord& w) {
    if (a.rows() != w.k() || a.cols() != w.n()) throw DomainError("member_closure_flags: shape mismatch");
    require_spanning(a);
    FlagClassification c = classify_all(w);
    std::vector<int> rows;
    bool member = true;
    c.truly().for_each([&](std::size_t i) {
        if (!member) return;
        const PositionSet& cols = c.index().at(i);
        rows.resize(cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = static_cast<int>(r) + 1;
        if (sgn(det(a.submatrix(rows, cols))) != 0) member = false;
    });
    return member;
}

bool member_closure_ess(TopRankCache& a, const RankedEssentialSet& ess) {
    for (const auto& t : ess.triples)
        if (a.rank(t.h, t.beta) > t.rank) return false;
    return true;
}

bool member_closure_ess(const RationalMatrix& a, const FubiniWord& w) {
    if (a.rows() != w.k() || a.cols() != w.n()) throw DomainError("member_closure_ess: shape mismatch");
    require_spanning(a);
    TopRankCache cache(a);
    return member_closure_ess(cache, ranked_essential_set(w));
}

bool medium_leq_ess(const RankedEssentialSet& v, const RankedEssentialSet& w) {
    for (const auto& tv : v.triples) {
        bool witnessed = false;
        for (const auto& tw : w.triples) {
            std::vector<int> diff;
            std::set_difference(tv.beta.begin(), tv.beta.end(), tw.beta.begin(), tw.beta.end(),
                                std::back_inserter(diff));
            int lhs = std::max(0, tv.h - tw.h) + static_cast<int>(diff.size());
            if (lhs <= tv.rank - tw.rank) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) return false;
    }
    return true;
}

bool medium_leq_ess(const FubiniWord& v, const FubiniWord& w) {
    if (v.n() != w.n() || v.k() != w.k()) throw DomainError("medium_leq_ess: shape mismatch");
    return medium_leq_ess(ranked_essential_set(v), ranked_essential_set(w));
}

// -------------------------------------------------------------- decomposition

Decomposition decompose(const RationalMatrix& a) {
    require_spanning(a);
    const int k = a.rows();
    const int n = a.cols();
    auto profile = prefix_rank_profile(a);

    // Word: initial columns raise the full-height prefix rank; their letter is
    // the first row at which the jump appears.
    std::vector<int> letters(static_cast<std::size_t>(n), 0);
    std::vector<int> initial_cols; // in position order
    for (int j = 1; j <= n; ++j) {
        if (profile[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] ==
            profile[static_cast<std::size_t>(k)][static_cast<std::size_t>(j - 1)])
            continue;
        int r = 1;
        while (profile[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] ==
               profile[static_cast<std::size_t>(r)][static_cast<std::size_t>(j - 1)])
            ++r;
        letters[static_cast<std::size_t>(j - 1)] = r;
        initial_cols.push_back(j);
    }
    for (int j = 1; j <= n; ++j) {
        if (letters[static_cast<std::size_t>(j - 1)] != 0) continue;
        std::vector<Rational> col = a.column(j);
        std::vector<std::vector<Rational>> basis;
        for (int c : initial_cols) {
            if (c > j) break;
            basis.push_back(a.column(c));
            if (in_span(col, basis)) {
                letters[static_cast<std::size_t>(j - 1)] = letters[static_cast<std::size_t>(c - 1)];
                break;
            }
        }
        if (letters[static_cast<std::size_t>(j - 1)] == 0)
            throw InternalError("decompose: redundant column " + std::to_string(j) + " outside earlier span");
    }
    FubiniWord w(letters, k);

    // Initial columns ordered by letter form G = U * N * D with N upper
    // unitriangular; Doolittle elimination without pivoting recovers U and N*D.
    RationalMatrix g(k, k);
    for (int l = 1; l <= k; ++l)
        for (int r = 1; r <= k; ++r) g(r, l) = a(r, w.alpha(l));
    RationalMatrix lower = RationalMatrix::identity(k);
    RationalMatrix upper(k, k);
    for (int i = 1; i <= k; ++i) {
        for (int j = i; j <= k; ++j) {
            Rational s = g(i, j);
            for (int t = 1; t < i; ++t) s -= lower(i, t) * upper(t, j);
            upper(i, j) = s;
        }
        if (sgn(upper(i, i)) == 0) throw InternalError("decompose: zero pivot for " + w.to_string());
        for (int r = i + 1; r <= k; ++r) {
            Rational s = g(r, i);
            for (int t = 1; t < i; ++t) s -= lower(r, t) * upper(t, i);
            lower(r, i) = s / upper(i, i);
        }
    }

    RationalMatrix reduced(k, n);
    RationalMatrix scaling(n, n);
    for (int j = 1; j <= n; ++j) {
        // y = lower^{-1} * col_j by forward substitution.
        std::vector<Rational> y(static_cast<std::size_t>(k));
        for (int r = 1; r <= k; ++r) {
            Rational s = a(r, j);
            for (int t = 1; t < r; ++t) s -= lower(r, t) * y[static_cast<std::size_t>(t - 1)];
            y[static_cast<std::size_t>(r - 1)] = s;
        }
        const Rational pivot = y[static_cast<std::size_t>(w[j] - 1)];
        if (sgn(pivot) == 0) throw InternalError("decompose: vanishing pivot coordinate in column " + std::to_string(j));
        scaling(j, j) = pivot;
        for (int r = 1; r <= k; ++r) reduced(r, j) = y[static_cast<std::size_t>(r - 1)] / pivot;
    }

    PatternMatrix pattern(w);
    for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= n; ++c) {
            Cell cell = pattern.at(r, c);
            const Rational& x = reduced(r, c);
            bool fits = cell == Cell::Star || (cell == Cell::One && x == 1) || (cell == Cell::Zero && sgn(x) == 0);
            if (!fits)
                throw InternalError("decompose: reduced matrix does not fit the pattern of " + w.to_string());
        }
    if (!(lower * reduced * scaling == a)) throw InternalError("decompose: factors do not reproduce the input");
    return {w, std::move(reduced), std::move(lower), std::move(scaling)};
}

} // namespace fubini
