#ifndef FUBINI_PATTERN_HPP
#define FUBINI_PATTERN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fubini/polynomial.hpp"
#include "fubini/word.hpp"

namespace fubini {

enum class Cell : std::uint8_t { Zero, One, Star };

/// The k x n {0, 1, *} representative grid of the cell indexed by a word.
/// Every column has a single One at row w_j; Stars sit only in rows of
/// letters whose initial position is strictly earlier than alpha(w_j).
class PatternMatrix {
public:
    explicit PatternMatrix(const FubiniWord& w);

    [[nodiscard]] const FubiniWord& word() const { return word_; }
    [[nodiscard]] int rows() const { return word_.k(); }
    [[nodiscard]] int cols() const { return word_.n(); }
    /// 1-based (row, column).
    [[nodiscard]] Cell at(int r, int c) const {
        return cells_[static_cast<std::size_t>((r - 1) * cols() + (c - 1))];
    }
    [[nodiscard]] int star_count() const;
    /// Rows rendered as "0 1 * *", one line each.
    [[nodiscard]] std::string to_string() const;

private:
    FubiniWord word_;
    std::vector<Cell> cells_;
};

/// Number of Stars in the pattern matrix.
int dimension(const FubiniWord& w);
/// dim(w) + C(k,2).
int cell_dimension(const FubiniWord& w);
/// n(k-1) - cell_dimension(w).
int codimension(const FubiniWord& w);

/// Maximum matching between `rows` and `cols` over nonzero cells of P.
/// Equals the maximum rank over all matrices fitting P (Star entries are
/// independent and each column carries one One, so no determinant term can
/// cancel).
int generic_rank(const PatternMatrix& p, std::span<const int> rows, std::span<const int> cols);

/// Prefix form: rows [h].
int generic_rank_prefix(const PatternMatrix& p, int h, std::span<const int> cols);

/// Sum of q^{dim(w)} over W_{n,k}.
IntPolynomial dim_polynomial(int n, int k);
/// Sum of q^{codim(w)} over W_{n,k}.
IntPolynomial poincare_polynomial(int n, int k);

} // namespace fubini

#endif
