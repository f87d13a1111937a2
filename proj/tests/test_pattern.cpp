#include <doctest.h>

#include <random>

#include "fubini/exact_linalg.hpp"
#include "fubini/pattern.hpp"
#include "oracles.hpp"

using namespace fubini;

namespace {

FubiniWord W(const char* s) { return parse_word(s); }

/// Literal reading of the definition: start from M_w and star (w_i, j) for
/// initial i < alpha(w_j) when j is initial with w_i < w_j, or j is redundant.
std::vector<std::string> literal_pattern(const FubiniWord& w) {
    std::vector<std::string> grid(static_cast<std::size_t>(w.k()), std::string(static_cast<std::size_t>(w.n()), '0'));
    std::vector<int> first = oracle::first_occurrences(std::vector<int>(w.letters().begin(), w.letters().end()), w.k());
    auto initial = [&](int pos) { return first[static_cast<std::size_t>(w[pos] - 1)] == pos; };
    for (int j = 1; j <= w.n(); ++j) {
        grid[static_cast<std::size_t>(w[j] - 1)][static_cast<std::size_t>(j - 1)] = '1';
        for (int i = 1; i <= w.n(); ++i) {
            if (!initial(i) || i >= first[static_cast<std::size_t>(w[j] - 1)]) continue;
            if ((initial(j) && w[i] < w[j]) || !initial(j)) grid[static_cast<std::size_t>(w[i] - 1)][static_cast<std::size_t>(j - 1)] = '*';
        }
    }
    return grid;
}

std::vector<std::string> rendered(const PatternMatrix& p) {
    std::vector<std::string> grid;
    for (int r = 1; r <= p.rows(); ++r) {
        std::string row;
        for (int c = 1; c <= p.cols(); ++c) row += p.at(r, c) == Cell::Zero ? '0' : p.at(r, c) == Cell::One ? '1' : '*';
        grid.push_back(row);
    }
    return grid;
}

oracle::Dense dense(const RationalMatrix& m, std::span<const int> rows, std::span<const int> cols) {
    oracle::Dense d;
    for (int r : rows) {
        std::vector<mpq_class> row;
        for (int c : cols) row.push_back(m(r, c));
        d.push_back(std::move(row));
    }
    return d;
}

} // namespace

TEST_SUITE("pattern") {

TEST_CASE("pattern matrices of the worked example") {
    CHECK(rendered(PatternMatrix(W("31422"))) == std::vector<std::string>{"01***", "00011", "10*0*", "0010*"});
    CHECK(rendered(PatternMatrix(W("31424"))) == std::vector<std::string>{"01***", "00010", "10*0*", "00101"});
    CHECK(PatternMatrix(W("31422")).to_string() == "0 1 * * *\n0 0 0 1 1\n1 0 * 0 *\n0 0 1 0 *\n");
    CHECK(rendered(PatternMatrix(W("122"))) == std::vector<std::string>{"1**", "011"});
    CHECK(dimension(W("31422")) == 6);
    CHECK(dimension(W("31424")) == 5);
    CHECK(PatternMatrix(W("31422")).star_count() == 6);
}

TEST_CASE("pattern agrees with a literal reading of the definition") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& w : enumerate_words(n, k)) CHECK(rendered(PatternMatrix(w)) == literal_pattern(w));
}

TEST_CASE("dimension, cell dimension, codimension") {
    CHECK(dimension(W("122")) == 2);
    CHECK(cell_dimension(W("122")) == 3);
    CHECK(codimension(W("122")) == 0);
    CHECK(codimension(W("31422")) == 3);
    CHECK(dimension(W("212")) == 0);
    CHECK(codimension(W("212")) == 2);
    CHECK(dimension(W("4321")) == 0);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            // The top cell fills the whole space: dim + C(k,2) = n(k-1).
            FubiniWord top = top_cell_word(n, k);
            CHECK(dimension(top) == n * (k - 1) - k * (k - 1) / 2);
            CHECK(codimension(top) == 0);
        }
    for (const auto& w : enumerate_words(6, 3)) {
        CHECK(codimension(w) >= 0);
        CHECK((codimension(w) == 0) == (w == top_cell_word(6, 3)));
    }
}

TEST_CASE("k = n dimensions follow the Mahonian distribution") {
    for (int n = 1; n <= 6; ++n) {
        oracle::Poly mahonian{0};
        for (const auto& w : enumerate_words(n, n)) {
            int inv = oracle::inversions(std::vector<int>(w.letters().begin(), w.letters().end()));
            CHECK(dimension(w) == n * (n - 1) / 2 - inv);
            oracle::Poly term(static_cast<std::size_t>(inv) + 1, 0);
            term.back() = 1;
            mahonian = oracle::poly_add(mahonian, term);
        }
        CHECK(dim_polynomial(n, n).coefficients() == mahonian);
    }
}

TEST_CASE("q-analogs") {
    CHECK(q_integer(3).to_string() == "1 + q + q^2");
    CHECK(q_factorial(3) == IntPolynomial({1, 2, 2, 1}));
    CHECK(q_stirling(3, 2) == IntPolynomial({2, 1}));
    CHECK(q_stirling(5, 5) == IntPolynomial({1}));
    CHECK(reverse(IntPolynomial({2, 1})) == IntPolynomial({1, 2}));
    CHECK(IntPolynomial({0, 0, 5}).to_string() == "5q^2");
    CHECK(IntPolynomial().to_string() == "0");
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(q_stirling(n, k).coefficients() == oracle::q_stirling(n, k));
            CHECK(q_factorial(k).coefficients() == oracle::q_fact(k));
        }
}

TEST_CASE("generating functions") {
    CHECK(dim_polynomial(3, 2).to_string() == "2 + 3q + q^2");
    CHECK(poincare_polynomial(3, 2).to_string() == "1 + 3q + 2q^2");
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            oracle::Poly rev = oracle::q_stirling(n, k);
            std::reverse(rev.begin(), rev.end());
            CAPTURE(n);
            CAPTURE(k);
            CHECK(poincare_polynomial(n, k).coefficients() == oracle::poly_mul(oracle::q_fact(k), rev));
            CHECK(dim_polynomial(n, k).coefficients() == oracle::poly_mul(oracle::q_fact(k), oracle::q_stirling(n, k)));
            CHECK(static_cast<std::uint64_t>(poincare_polynomial(n, k).sum()) == fubini_count(n, k));
        }
}

TEST_CASE("generic rank") {
    PatternMatrix p122(W("122"));
    std::vector<int> cols23{2, 3};
    CHECK(generic_rank_prefix(p122, 1, cols23) == 1);
    PatternMatrix p8(W("21231231"));
    std::vector<int> col1{1};
    CHECK(generic_rank_prefix(p8, 1, col1) == 0);
    std::vector<int> init{2, 1, 4};
    std::sort(init.begin(), init.end());
    CHECK(generic_rank_prefix(p8, 3, init) == 3);

    // Against the largest nonsingular minor of seeded samples.
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& w : enumerate_words(n, k)) {
                PatternMatrix p(w);
                RationalMatrix a = sample_from_pattern(p, std::uint64_t{7});
                RationalMatrix b = sample_from_pattern(p, std::uint64_t{8});
                for (std::uint32_t rmask = 1; rmask < (1U << k); ++rmask)
                    for (std::uint32_t cmask = 1; cmask < (1U << n); ++cmask) {
                        std::vector<int> rows;
                        std::vector<int> cols;
                        for (int r = 0; r < k; ++r)
                            if (rmask >> r & 1U) rows.push_back(r + 1);
                        for (int c = 0; c < n; ++c)
                            if (cmask >> c & 1U) cols.push_back(c + 1);
                        int sampled = std::max(oracle::minor_rank(dense(a, rows, cols)), oracle::minor_rank(dense(b, rows, cols)));
                        CHECK(generic_rank(p, rows, cols) == sampled);
                    }
            }
}

}
