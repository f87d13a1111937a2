#ifndef FUBINI_EXACT_LINALG_HPP
#define FUBINI_EXACT_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fubini/pattern.hpp"

namespace fubini {

using Rational = mpq_class;

/// Dense exact k x n matrix; entries are kept canonical (reduced, positive
/// denominator). Indices are 1-based.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);
    static RationalMatrix identity(int size);
    /// 0/1 matrix with a One at (w_j, j).
    static RationalMatrix from_word(const FubiniWord& w);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }
    Rational& operator()(int r, int c) { return data_[index(r, c)]; }

    [[nodiscard]] RationalMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;
    [[nodiscard]] std::vector<Rational> column(int c) const;
    [[nodiscard]] bool has_zero_column() const;
    [[nodiscard]] std::string to_string() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    [[nodiscard]] std::size_t index(int r, int c) const {
        return static_cast<std::size_t>((r - 1) * cols_ + (c - 1));
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// row-denominator-cleared integer matrix.
Rational det(const RationalMatrix& m);
int rank(const RationalMatrix& m);
int rank(const RationalMatrix& m, std::span<const int> rows, std::span<const int> cols);
/// (k+1) x (n+1) table; profile[r][j] is the rank of the top-left r x j block.
std::vector<std::vector<int>> prefix_rank_profile(const RationalMatrix& a);
/// Whether v lies in the span of the given columns.
bool in_span(const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& basis);
/// Solves m x = b for square invertible m.
std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b);
/// Full rank with no zero column.
bool is_spanning(const RationalMatrix& a);

// --------------------------------------------------------------- prime field

/// Arithmetic modulo a prime p < 2^63.
class PrimeField {
public:
    static constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL; // 2^61 - 1
    static constexpr std::uint64_t kSecondPrime = 2305843009213693921ULL;  // largest prime below 2^61 - 1

    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {}

    [[nodiscard]] std::uint64_t modulus() const { return p_; }
    [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    [[nodiscard]] std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    [[nodiscard]] std::uint64_t inv(std::uint64_t a) const;
    /// Reduces an integer or rational value; throws if the denominator vanishes mod p.
    [[nodiscard]] std::uint64_t reduce(const Rational& q) const;
    [[nodiscard]] std::uint64_t reduce(std::int64_t v) const;

private:
    std::uint64_t p_;
};

/// Dense matrix over a PrimeField, entries in [0, p).
class PrimeFieldMatrix {
public:
    PrimeFieldMatrix(const PrimeField& field, int rows, int cols);
    static PrimeFieldMatrix from_rational(const PrimeField& field, const RationalMatrix& m);

    [[nodiscard]] const PrimeField& field() const { return field_; }
    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    [[nodiscard]] std::uint64_t operator()(int r, int c) const { return data_[index(r, c)]; }
    std::uint64_t& operator()(int r, int c) { return data_[index(r, c)]; }

    [[nodiscard]] PrimeFieldMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;

    friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);

private:
    [[nodiscard]] std::size_t index(int r, int c) const {
        return static_cast<std::size_t>((r - 1) * cols_ + (c - 1));
    }
    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<std::uint64_t> data_;
};

std::uint64_t det(const PrimeFieldMatrix& m);
int rank(const PrimeFieldMatrix& m);

// ------------------------------------------------------------------ sampling

/// Star samples: numerators uniform in [-99, 99], denominator 1.
struct RationalSampling {
    int bound = 99;
    bool allow_zero = false;
};

/// Replaces every Star of P by an independent sample; Ones and Zeros fixed.
RationalMatrix sample_from_pattern(const PatternMatrix& p, std::mt19937_64& rng, RationalSampling opts = {});
RationalMatrix sample_from_pattern(const PatternMatrix& p, std::uint64_t seed, RationalSampling opts = {});
/// Star samples uniform over the field (nonzero unless allow_zero).
PrimeFieldMatrix sample_from_pattern(const PatternMatrix& p, const PrimeField& field, std::mt19937_64& rng,
                                     bool allow_zero = false);

/// Lower unitriangular k x k matrix with uniform samples strictly below the diagonal.
RationalMatrix random_unitriangular(int k, std::mt19937_64& rng, RationalSampling opts = {.allow_zero = true});
RationalMatrix random_unitriangular(int k, std::uint64_t seed, RationalSampling opts = {.allow_zero = true});
PrimeFieldMatrix random_unitriangular(int k, const PrimeField& field, std::mt19937_64& rng);
/// Diagonal n x n matrix with nonzero samples on the diagonal.
RationalMatrix random_diagonal(int n, std::mt19937_64& rng, RationalSampling opts = {});

} // namespace fubini

#endif
