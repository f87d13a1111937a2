#ifndef FUBINI_TESTS_ORACLES_HPP
#define FUBINI_TESTS_ORACLES_HPP

// Brute-force references, written independently of the library code paths
// they are compared against.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;

/// Every string in [k]^n that uses all k letters, in lexicographic order.
inline std::vector<std::vector<int>> surjective_strings(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(static_cast<std::size_t>(n), 1);
    while (true) {
        std::set<int> used(s.begin(), s.end());
        if (static_cast<int>(used.size()) == k) out.push_back(s);
        int i = n - 1;
        while (i >= 0 && s[static_cast<std::size_t>(i)] == k) s[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++s[static_cast<std::size_t>(i)];
    }
    return out;
}

/// Laplace expansion along the first row.
inline mpq_class cofactor_det(const Dense& m) {
    const std::size_t size = m.size();
    if (size == 0) return 1;
    if (size == 1) return m[0][0];
    mpq_class total = 0;
    for (std::size_t c = 0; c < size; ++c) {
        if (m[0][c] == 0) continue;
        Dense minor;
        for (std::size_t r = 1; r < size; ++r) {
            std::vector<mpq_class> row;
            for (std::size_t j = 0; j < size; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        mpq_class term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : mpq_class(-term);
    }
    return total;
}

/// Largest size of a nonsingular square submatrix.
inline int minor_rank(const Dense& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int size = std::min(rows, cols); size > 0; --size) {
        for (std::uint32_t rmask = 0; rmask < (1U << rows); ++rmask) {
            if (std::popcount(rmask) != size) continue;
            for (std::uint32_t cmask = 0; cmask < (1U << cols); ++cmask) {
                if (std::popcount(cmask) != size) continue;
                Dense sub;
                for (int r = 0; r < rows; ++r) {
                    if (!(rmask >> r & 1U)) continue;
                    std::vector<mpq_class> row;
                    for (int c = 0; c < cols; ++c)
                        if (cmask >> c & 1U) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                    sub.push_back(std::move(row));
                }
                if (cofactor_det(sub) != 0) return size;
            }
        }
    }
    return 0;
}

/// Coefficient vectors; index = power of q.
using Poly = std::vector<std::int64_t>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly poly_add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

inline Poly q_int(int m) { return Poly(static_cast<std::size_t>(m), 1); }

/// Table-filled q-Stirling numbers of the second kind.
inline Poly q_stirling(int n, int k) {
    std::vector<std::vector<Poly>> t(static_cast<std::size_t>(n) + 1, std::vector<Poly>(static_cast<std::size_t>(n) + 1, Poly{0}));
    t[0][0] = Poly{1};
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= m; ++j)
            t[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
                poly_add(t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)],
                         poly_mul(q_int(j), t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)]));
    Poly p = t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

inline Poly q_fact(int k) {
    Poly p{1};
    for (int i = 1; i <= k; ++i) p = poly_mul(p, q_int(i));
    return p;
}

inline int inversions(const std::vector<int>& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
}

/// Bruhat order on S_n as the transitive closure of u < (value swap of u)
/// whenever the swap raises the inversion count. Returns the permutations in
/// lex order and the reflexive relation matrix.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<bool>>> bruhat_by_transpositions(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> perms;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t size = perms.size();
    auto index = [&](const std::vector<int>& q) {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
    for (std::size_t i = 0; i < size; ++i) {
        leq[i][i] = true;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                std::vector<int> q = perms[i];
                for (int& x : q) x = x == a ? b : x == b ? a : x;
                if (inversions(q) > inversions(perms[i])) leq[i][index(q)] = true;
            }
    }
    for (std::size_t m = 0; m < size; ++m)
        for (std::size_t i = 0; i < size; ++i)
            if (leq[i][m])
                for (std::size_t j = 0; j < size; ++j)
                    if (leq[m][j]) leq[i][j] = true;
    return {perms, leq};
}

/// Position (1-based) of the first occurrence of each letter.
inline std::vector<int> first_occurrences(const std::vector<int>& w, int k) {
    std::vector<int> a(static_cast<std::size_t>(k), 0);
    for (std::size_t j = w.size(); j-- > 0;) a[static_cast<std::size_t>(w[j] - 1)] = static_cast<int>(j) + 1;
    return a;
}

} // namespace oracle

#endif
