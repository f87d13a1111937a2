#include "fubini/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace fubini {

// ------------------------------------------------------------ RationalMatrix

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), Rational(0)) {
    if (rows < 0 || cols < 0) throw DomainError("matrix: negative shape");
}

RationalMatrix RationalMatrix::identity(int size) {
    RationalMatrix m(size, size);
    for (int i = 1; i <= size; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_word(const FubiniWord& w) {
    RationalMatrix m(w.k(), w.n());
    for (int j = 1; j <= w.n(); ++j) m(w[j], j) = 1;
    return m;
}

RationalMatrix RationalMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
    RationalMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] < 1 || rows[r] > rows_) throw DomainError("submatrix: row out of range");
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c] < 1 || cols[c] > cols_) throw DomainError("submatrix: column out of range");
            out(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = (*this)(rows[r], cols[c]);
        }
    }
    return out;
}

std::vector<Rational> RationalMatrix::column(int c) const {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(rows_));
    for (int r = 1; r <= rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

bool RationalMatrix::has_zero_column() const {
    for (int c = 1; c <= cols_; ++c) {
        bool zero = true;
        for (int r = 1; r <= rows_ && zero; ++r) zero = sgn((*this)(r, c)) == 0;
        if (zero) return true;
    }
    return false;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    for (int r = 1; r <= rows_; ++r) {
        for (int c = 1; c <= cols_; ++c) {
            if (c > 1) out << ' ';
            out << (*this)(r, c).get_str();
        }
        out << '\n';
    }
    return out.str();
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (int i = 1; i <= a.rows_; ++i)
        for (int t = 1; t <= a.cols_; ++t) {
            const Rational& x = a(i, t);
            if (sgn(x) == 0) continue;
            for (int j = 1; j <= b.cols_; ++j) out(i, j) += x * b(t, j);
        }
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

using IntegerMatrix = std::vector<std::vector<mpz_class>>;

// Clears denominators row by row. Returns the product of the row scale factors.
mpz_class to_integer_rows(const RationalMatrix& m, IntegerMatrix& out) {
    out.assign(static_cast<std::size_t>(m.rows()), std::vector<mpz_class>(static_cast<std::size_t>(m.cols())));
    mpz_class scale = 1;
    for (int r = 1; r <= m.rows(); ++r) {
        mpz_class l = 1;
        for (int c = 1; c <= m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (int c = 1; c <= m.cols(); ++c)
            out[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] =
                m(r, c).get_num() * (l / m(r, c).get_den());
        scale *= l;
    }
    return scale;
}

// Fraction-free elimination in place; returns the rank. With `sign` set,
// tracks row swaps so that for square input the last pivot is the determinant.
int bareiss(IntegerMatrix& a, int* sign) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
            if (sign) *sign = -*sign;
        }
        auto& prow = a[static_cast<std::size_t>(r)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            for (int j = c + 1; j < cols; ++j) {
                auto sj = static_cast<std::size_t>(j);
                row[sj] = prow[static_cast<std::size_t>(c)] * row[sj] - row[static_cast<std::size_t>(c)] * prow[sj];
                mpz_divexact(row[sj].get_mpz_t(), row[sj].get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = prow[static_cast<std::size_t>(c)];
        ++r;
    }
    return r;
}

} // namespace

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("det: matrix is not square");
    if (m.rows() == 0) return Rational(1);
    IntegerMatrix a;
    mpz_class scale = to_integer_rows(m, a);
    int sign = 1;
    int r = bareiss(a, &sign);
    if (r < m.rows()) return Rational(0);
    auto last = static_cast<std::size_t>(m.rows() - 1);
    Rational d(a[last][last] * sign, scale);
    d.canonicalize();
    return d;
}

int rank(const RationalMatrix& m) {
    IntegerMatrix a;
    to_integer_rows(m, a);
    return bareiss(a, nullptr);
}

int rank(const RationalMatrix& m, std::span<const int> rows, std::span<const int> cols) {
    if (rows.empty() || cols.empty()) return 0;
    return rank(m.submatrix(rows, cols));
}

std::vector<std::vector<int>> prefix_rank_profile(const RationalMatrix& a) {
    const int k = a.rows();
    const int n = a.cols();
    std::vector<std::vector<int>> profile(static_cast<std::size_t>(k) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int r = 1; r <= k; ++r) {
        // Incremental echelon basis of truncated columns (length r).
        std::vector<std::vector<Rational>> basis;
        std::vector<int> pivots;
        for (int j = 1; j <= n; ++j) {
            std::vector<Rational> v(static_cast<std::size_t>(r));
            for (int i = 1; i <= r; ++i) v[static_cast<std::size_t>(i - 1)] = a(i, j);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                auto p = static_cast<std::size_t>(pivots[b]);
                if (sgn(v[p]) == 0) continue;
                Rational f = v[p] / basis[b][p];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * basis[b][i];
            }
            auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
            int rank_here = static_cast<int>(basis.size());
            if (it != v.end()) {
                pivots.push_back(static_cast<int>(it - v.begin()));
                basis.push_back(std::move(v));
                ++rank_here;
            }
            profile[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = rank_here;
        }
    }
    return profile;
}

bool in_span(const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& basis) {
    const int height = static_cast<int>(v.size());
    for (const auto& b : basis)
        if (static_cast<int>(b.size()) != height) throw DomainError("in_span: height mismatch");
    const int count = static_cast<int>(basis.size());
    RationalMatrix without(height, count);
    RationalMatrix with(height, count + 1);
    for (int c = 1; c <= count; ++c)
        for (int r = 1; r <= height; ++r) {
            without(r, c) = basis[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(r - 1)];
            with(r, c) = without(r, c);
        }
    for (int r = 1; r <= height; ++r) with(r, count + 1) = v[static_cast<std::size_t>(r - 1)];
    return rank(without) == rank(with);
}

std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    const int size = m.rows();
    if (m.cols() != size || static_cast<int>(b.size()) != size) throw DomainError("solve: shape mismatch");
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size));
    for (int r = 1; r <= size; ++r) {
        auto& row = a[static_cast<std::size_t>(r - 1)];
        for (int c = 1; c <= size; ++c) row.push_back(m(r, c));
        row.push_back(b[static_cast<std::size_t>(r - 1)]);
    }
    auto n = static_cast<std::size_t>(size);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) throw DomainError("solve: singular matrix");
        std::swap(a[p], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

bool is_spanning(const RationalMatrix& a) { return !a.has_zero_column() && rank(a) == a.rows(); }

// --------------------------------------------------------------- PrimeField

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw DomainError("prime field: inverse of zero");
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0;
    __int128 new_t = 1;
    __int128 r = static_cast<__int128>(p_);
    __int128 new_r = static_cast<__int128>(a);
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<__int128>(p_);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
    auto m = static_cast<__int128>(v) % static_cast<__int128>(p_);
    if (m < 0) m += static_cast<__int128>(p_);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t PrimeField::reduce(const Rational& q) const {
    mpz_class pz;
    mpz_import(pz.get_mpz_t(), 1, 1, sizeof(p_), 0, 0, &p_);
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw DomainError("prime field: denominator vanishes modulo p");
    auto to_u64 = [](const mpz_class& z) {
        std::uint64_t out = 0;
        mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
        return out;
    };
    return mul(to_u64(num), inv(to_u64(den)));
}

// ---------------------------------------------------------- PrimeFieldMatrix

PrimeFieldMatrix::PrimeFieldMatrix(const PrimeField& field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

PrimeFieldMatrix PrimeFieldMatrix::from_rational(const PrimeField& field, const RationalMatrix& m) {
    PrimeFieldMatrix out(field, m.rows(), m.cols());
    for (int r = 1; r <= m.rows(); ++r)
        for (int c = 1; c <= m.cols(); ++c) out(r, c) = field.reduce(m(r, c));
    return out;
}

PrimeFieldMatrix PrimeFieldMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
    PrimeFieldMatrix out(field_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(static_cast<int>(r) + 1, static_cast<int>(c) + 1) = (*this)(rows[r], cols[c]);
    return out;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
    if (a.cols_ != b.rows_ || a.field_.modulus() != b.field_.modulus())
        throw DomainError("matrix product: shape or field mismatch");
    const PrimeField& f = a.field_;
    PrimeFieldMatrix out(f, a.rows_, b.cols_);
    for (int i = 1; i <= a.rows_; ++i)
        for (int t = 1; t <= a.cols_; ++t) {
            std::uint64_t x = a(i, t);
            if (x == 0) continue;
            for (int j = 1; j <= b.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(x, b(t, j)));
        }
    return out;
}

namespace {

// Gaussian elimination mod p. Returns rank; *determinant receives the
// product of pivots with sign (meaningful for square input of full rank).
int eliminate(std::vector<std::uint64_t> a, int rows, int cols, const PrimeField& f, std::uint64_t* determinant) {
    auto at = [&](int r, int c) -> std::uint64_t& { return a[static_cast<std::size_t>(r * cols + c)]; };
    std::uint64_t d = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            d = 0;
            continue;
        }
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
            d = f.neg(d);
        }
        std::uint64_t pv = at(r, c);
        d = f.mul(d, pv);
        std::uint64_t pinv = f.inv(pv);
        for (int i = r + 1; i < rows; ++i) {
            if (at(i, c) == 0) continue;
            std::uint64_t factor = f.mul(at(i, c), pinv);
            for (int j = c; j < cols; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
        }
        ++r;
    }
    if (determinant) *determinant = (r == rows && rows == cols) ? d : 0;
    return r;
}

} // namespace

std::uint64_t det(const PrimeFieldMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("det: matrix is not square");
    if (m.rows() == 0) return 1;
    std::vector<std::uint64_t> a;
    a.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
    for (int r = 1; r <= m.rows(); ++r)
        for (int c = 1; c <= m.cols(); ++c) a.push_back(m(r, c));
    std::uint64_t d = 0;
    eliminate(std::move(a), m.rows(), m.cols(), m.field(), &d);
    return d;
}

int rank(const PrimeFieldMatrix& m) {
    std::vector<std::uint64_t> a;
    for (int r = 1; r <= m.rows(); ++r)
        for (int c = 1; c <= m.cols(); ++c) a.push_back(m(r, c));
    return eliminate(std::move(a), m.rows(), m.cols(), m.field(), nullptr);
}

// ------------------------------------------------------------------ sampling

namespace {

std::int64_t small_sample(std::mt19937_64& rng, const RationalSampling& opts) {
    std::uniform_int_distribution<std::int64_t> dist(-opts.bound, opts.bound);
    for (;;) {
        std::int64_t v = dist(rng);
        if (v != 0 || opts.allow_zero) return v;
    }
}

std::uint64_t field_sample(std::mt19937_64& rng, const PrimeField& f, bool allow_zero) {
    std::uniform_int_distribution<std::uint64_t> dist(allow_zero ? 0 : 1, f.modulus() - 1);
    return dist(rng);
}

} // namespace

RationalMatrix sample_from_pattern(const PatternMatrix& p, std::mt19937_64& rng, RationalSampling opts) {
    RationalMatrix m(p.rows(), p.cols());
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.cols(); ++c) {
            switch (p.at(r, c)) {
            case Cell::Zero: break;
            case Cell::One: m(r, c) = 1; break;
            case Cell::Star: m(r, c) = Rational(small_sample(rng, opts)); break;
            }
        }
    return m;
}

RationalMatrix sample_from_pattern(const PatternMatrix& p, std::uint64_t seed, RationalSampling opts) {
    std::mt19937_64 rng(seed);
    return sample_from_pattern(p, rng, opts);
}

PrimeFieldMatrix sample_from_pattern(const PatternMatrix& p, const PrimeField& field, std::mt19937_64& rng,
                                     bool allow_zero) {
    PrimeFieldMatrix m(field, p.rows(), p.cols());
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.cols(); ++c) {
            switch (p.at(r, c)) {
            case Cell::Zero: break;
            case Cell::One: m(r, c) = 1; break;
            case Cell::Star: m(r, c) = field_sample(rng, field, allow_zero); break;
            }
        }
    return m;
}

RationalMatrix random_unitriangular(int k, std::mt19937_64& rng, RationalSampling opts) {
    if (k < 1) throw DomainError("random_unitriangular: k must be positive");
    RationalMatrix m = RationalMatrix::identity(k);
    for (int r = 2; r <= k; ++r)
        for (int c = 1; c < r; ++c) m(r, c) = Rational(small_sample(rng, opts));
    return m;
}

RationalMatrix random_unitriangular(int k, std::uint64_t seed, RationalSampling opts) {
    std::mt19937_64 rng(seed);
    return random_unitriangular(k, rng, opts);
}

PrimeFieldMatrix random_unitriangular(int k, const PrimeField& field, std::mt19937_64& rng) {
    if (k < 1) throw DomainError("random_unitriangular: k must be positive");
    PrimeFieldMatrix m(field, k, k);
    for (int r = 1; r <= k; ++r) {
        m(r, r) = 1;
        for (int c = 1; c < r; ++c) m(r, c) = field_sample(rng, field, true);
    }
    return m;
}

RationalMatrix random_diagonal(int n, std::mt19937_64& rng, RationalSampling opts) {
    opts.allow_zero = false;
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m(i, i) = Rational(small_sample(rng, opts));
    return m;
}

} // namespace fubini
