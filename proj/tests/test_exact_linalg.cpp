#include <doctest.h>

#include <random>

#include "fubini/error.hpp"
#include "fubini/exact_linalg.hpp"
#include "oracles.hpp"

using namespace fubini;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 1; r <= m.rows(); ++r)
        for (int c = 1; c <= m.cols(); ++c) m(r, c) = rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
    return m;
}

oracle::Dense dense(const RationalMatrix& m) {
    oracle::Dense d;
    for (int r = 1; r <= m.rows(); ++r) {
        std::vector<mpq_class> row;
        for (int c = 1; c <= m.cols(); ++c) row.push_back(m(r, c));
        d.push_back(std::move(row));
    }
    return d;
}

RationalMatrix random_matrix(int rows, int cols, std::mt19937_64& rng, int bound, bool fractions) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 7);
    RationalMatrix m(rows, cols);
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            Rational q(num(rng), fractions ? den(rng) : 1);
            q.canonicalize();
            m(r, c) = q;
        }
    return m;
}

std::vector<int> iota(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return v;
}

} // namespace

TEST_SUITE("exact_linalg") {

TEST_CASE("determinant and rank examples") {
    CHECK(det(RationalMatrix::identity(3)) == 1);
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(det(from_rows({{1, 1}, {1, 1}})) == 0);
    CHECK(rank(from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(det(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(from_rows({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})) == 0);

    RationalMatrix m1123 = RationalMatrix::from_word(parse_word("1123"));
    std::vector<int> top2{1, 2};
    std::vector<int> c13{1, 3};
    CHECK(det(m1123.submatrix(top2, c13)) == 1);
    CHECK(rank(m1123, top2, c13) == 2);
    std::vector<int> r1{1};
    std::vector<int> c12{1, 2};
    CHECK(rank(m1123, r1, c12) == 1);
    CHECK(rank(m1123) == 3);
    std::vector<int> r3{3};
    CHECK(rank(m1123, r3, c12) == 0);
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int size = 1 + trial % 5;
        RationalMatrix m = random_matrix(size, size, rng, trial % 3 == 0 ? 2 : 50, trial % 2 == 0);
        CHECK(det(m) == oracle::cofactor_det(dense(m)));
    }
    // Large entries force GMP paths.
    RationalMatrix big(2, 2);
    big(1, 1) = Rational(mpz_class("123456789012345678901234567890"));
    big(1, 2) = 1;
    big(2, 1) = 1;
    big(2, 2) = Rational(mpz_class("98765432109876543210"));
    CHECK(det(big) == oracle::cofactor_det(dense(big)));
}

TEST_CASE("rank matches the largest nonsingular minor") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 80; ++trial) {
        int rows = 1 + trial % 4;
        int cols = 1 + (trial / 4) % 5;
        RationalMatrix m = random_matrix(rows, cols, rng, 1, trial % 2 == 1);
        CHECK(rank(m) == oracle::minor_rank(dense(m)));
    }
}

TEST_CASE("prefix rank profile") {
    auto p12 = prefix_rank_profile(RationalMatrix::from_word(parse_word("12")));
    for (int r = 0; r <= 2; ++r)
        for (int j = 0; j <= 2; ++j) CHECK(p12[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] == std::min(r, j));
    auto p1123 = prefix_rank_profile(RationalMatrix::from_word(parse_word("1123")));
    CHECK(p1123[1][2] == 1);
    CHECK(p1123[2][2] == 1);
    auto p21 = prefix_rank_profile(RationalMatrix::from_word(parse_word("21")));
    CHECK(p21[1][1] == 0);
    CHECK(p21[2][1] == 1);

    std::mt19937_64 rng(3);
    RationalMatrix m = random_matrix(3, 5, rng, 1, false);
    auto prof = prefix_rank_profile(m);
    for (int r = 0; r <= 3; ++r)
        for (int j = 0; j <= 5; ++j)
            CHECK(prof[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] == rank(m, iota(r), iota(j)));
}

TEST_CASE("span and solve") {
    std::vector<Rational> e1{1, 0, 0};
    std::vector<Rational> e2{0, 1, 0};
    CHECK(in_span(e1, {e1}));
    CHECK_FALSE(in_span(e2, {e1}));
    CHECK(in_span(std::vector<Rational>{0, 0, 0}, {}));

    RationalMatrix m = RationalMatrix::from_word(parse_word("31424"));
    std::vector<std::vector<Rational>> basis{m.column(1), m.column(2), m.column(3)};
    CHECK(in_span(m.column(5), basis));

    RationalMatrix a = from_rows({{2, 1}, {1, 3}});
    std::vector<Rational> x = solve(a, {Rational(3), Rational(5)});
    CHECK(x[0] == Rational(4, 5));
    CHECK(x[1] == Rational(7, 5));
    CHECK_THROWS_AS(solve(from_rows({{1, 1}, {1, 1}}), {Rational(1), Rational(1)}), DomainError);

    CHECK(is_spanning(RationalMatrix::from_word(parse_word("2113"))));
    CHECK_FALSE(is_spanning(from_rows({{1, 0}, {0, 0}})));
    CHECK_FALSE(is_spanning(from_rows({{1, 0, 0}, {0, 1, 0}})));
}

TEST_CASE("prime field arithmetic") {
    for (std::uint64_t p : {PrimeField::kDefaultPrime, PrimeField::kSecondPrime, std::uint64_t{101}}) {
        PrimeField f(p);
        std::mt19937_64 rng(p);
        for (int i = 0; i < 200; ++i) {
            std::uint64_t a = 1 + rng() % (p - 1);
            CHECK(f.mul(a, f.inv(a)) == 1);
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.sub(a, a) == 0);
        }
        CHECK(f.reduce(std::int64_t{-1}) == p - 1);
        CHECK(f.mul(f.reduce(Rational(1, 3)), 3) == 1);
    }
    // det and rank mod p agree with the rational ones on small integer matrices.
    std::mt19937_64 rng(11);
    PrimeField f;
    for (int trial = 0; trial < 40; ++trial) {
        int size = 1 + trial % 4;
        RationalMatrix m = random_matrix(size, size + trial % 2, rng, 3, false);
        PrimeFieldMatrix pm = PrimeFieldMatrix::from_rational(f, m);
        CHECK(rank(pm) == rank(m));
        if (m.rows() == m.cols()) CHECK(det(pm) == f.reduce(det(m)));
    }
}

TEST_CASE("sampling respects patterns and is reproducible") {
    PatternMatrix p122(parse_word("122"));
    RationalMatrix a = sample_from_pattern(p122, std::uint64_t{5});
    CHECK(a == sample_from_pattern(p122, std::uint64_t{5}));
    CHECK(a(1, 1) == 1);
    CHECK(a(2, 1) == 0);
    CHECK(a(2, 2) == 1);
    CHECK(a(2, 3) == 1);
    CHECK(a(1, 2) != 0);
    CHECK(a(1, 3) != 0);
    RationalMatrix id = sample_from_pattern(PatternMatrix(parse_word("21")), std::uint64_t{1});
    CHECK(id == RationalMatrix::from_word(parse_word("21")));

    CHECK(random_unitriangular(1, std::uint64_t{3}) == RationalMatrix::identity(1));
    RationalMatrix u = random_unitriangular(3, std::uint64_t{3});
    CHECK(u == random_unitriangular(3, std::uint64_t{3}));
    for (int r = 1; r <= 3; ++r)
        for (int c = r; c <= 3; ++c) CHECK(u(r, c) == (r == c ? 1 : 0));

    for (const auto& w : enumerate_words(5, 3)) {
        RationalMatrix s = sample_from_pattern(PatternMatrix(w), std::uint64_t{9});
        CHECK(is_spanning(s));
    }
}

}
