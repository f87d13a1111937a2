#include <doctest.h>

#include <map>

#include "fubini/error.hpp"
#include "fubini/word.hpp"
#include "oracles.hpp"

using namespace fubini;

namespace {

FubiniWord W(const char* s) { return parse_word(s); }

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

} // namespace

TEST_SUITE("word") {

TEST_CASE("parsing digit and comma forms") {
    FubiniWord w = W("31424");
    CHECK(w.n() == 5);
    CHECK(w.k() == 4);
    CHECK(vec(w.letters()) == std::vector<int>{3, 1, 4, 2, 4});
    CHECK(W("1").n() == 1);
    CHECK(W("1").k() == 1);

    FubiniWord big = parse_word("1,2,10,3,4,5,6,7,8,9");
    CHECK(big.k() == 10);
    CHECK(big.to_string() == "1,2,10,3,4,5,6,7,8,9");
    CHECK(parse_word(big.to_string()) == big);
    CHECK(parse_word("3,1,4,2,4") == w);

    CHECK_THROWS_AS(parse_word(""), DomainError);
    CHECK_THROWS_AS(parse_word("1a2"), DomainError);
    CHECK_THROWS_AS(parse_word("13"), DomainError);      // letter 2 missing
    CHECK_THROWS_AS(parse_word("0,1"), DomainError);
    CHECK_THROWS_AS(parse_word("1,,2"), DomainError);
    CHECK_THROWS_AS(parse_word("12", 3), DomainError);   // not surjective onto [3]
    CHECK_THROWS_AS(parse_word("123", 2), DomainError);
}

TEST_CASE("printing round-trips for every word up to n = 5") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& w : enumerate_words(n, k)) CHECK(parse_word(w.to_string(), k) == w);
}

TEST_CASE("enumeration matches brute-force filtering of k^n strings") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            auto words = enumerate_words(n, k);
            auto brute = oracle::surjective_strings(n, k);
            REQUIRE(words.size() == brute.size());
            CHECK(words.size() == fubini_count(n, k));
            for (std::size_t i = 0; i < words.size(); ++i) CHECK(vec(words[i].letters()) == brute[i]);
        }
    std::vector<std::string> w32;
    for (const auto& w : enumerate_words(3, 2)) w32.push_back(w.to_string());
    CHECK(w32 == std::vector<std::string>{"112", "121", "122", "211", "212", "221"});
    CHECK(enumerate_words(4, 1).size() == 1);
    CHECK(enumerate_words(4, 1)[0].to_string() == "1111");
    CHECK(enumerate_words(5, 5).size() == 120);
    CHECK(fubini_count(7, 7) == 5040);
    CHECK(fubini_count(7, 4) == 8400);
}

TEST_CASE("alpha vector") {
    CHECK(alpha_vector(W("21231231")) == std::vector<int>{2, 1, 4});
    CHECK(alpha_vector(W("31424")) == std::vector<int>{2, 4, 1, 3});
    CHECK(alpha_vector(top_cell_word(6, 3)) == std::vector<int>{1, 2, 3});
    CHECK(top_cell_word(6, 3).to_string() == "123333");
    for (const auto& w : enumerate_words(5, 3))
        CHECK(alpha_vector(w) == oracle::first_occurrences(vec(w.letters()), 3));
}

TEST_CASE("alpha multiset and Gale order") {
    FubiniWord w = W("21231231");
    std::vector<int> j{2, 6, 8};
    CHECK(alpha_multiset(w, j) == PositionMultiset({1, 2, 2}));
    std::vector<int> init{1, 2, 4};
    CHECK(alpha_multiset(w, init) == PositionMultiset({1, 2, 4}));
    CHECK(alpha_prefix(w, 3) == PositionMultiset({1, 2, 4}));

    CHECK_FALSE(gale_leq(PositionMultiset({1, 2, 4}), PositionMultiset({1, 2, 2})));
    CHECK(gale_leq(PositionMultiset({1, 2, 4}), PositionMultiset({1, 3, 5})));
    CHECK(gale_leq(PositionMultiset({3, 1, 2}), PositionMultiset({1, 2, 3})));
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) {
            PositionMultiset x({a, b});
            CHECK(gale_leq(x, x));
        }
}

TEST_CASE("initial permutation, blocks and beta chain") {
    CHECK(initial_permutation(W("31422")).to_string() == "3142");
    CHECK(initial_permutation(W("12123123")).to_string() == "123");
    CHECK(initial_permutation(W("2413")).to_string() == "2413");

    auto beta = beta_chain(W("12123123"));
    REQUIRE(beta.size() == 3);
    CHECK(beta[0] == PositionSet{1, 3, 6});
    CHECK(beta[1] == PositionSet{1, 2, 3, 4, 6, 7});
    CHECK(beta[2] == PositionSet{1, 2, 3, 4, 5, 6, 7, 8});
    auto b122 = beta_chain(W("122"));
    CHECK(b122[0] == PositionSet{1});
    CHECK(b122[1] == PositionSet{1, 2, 3});
    for (const auto& w : enumerate_words(4, 4)) {
        auto b = beta_chain(w);
        for (int i = 1; i <= 4; ++i) CHECK(static_cast<int>(b[static_cast<std::size_t>(i - 1)].size()) == i);
    }

    auto blocks = ordered_set_partition(W("1123"));
    CHECK(blocks == std::vector<PositionSet>{{1, 2}, {3}, {4}});
    CHECK(ordered_set_partition(W("21231231")) == std::vector<PositionSet>{{2, 5, 8}, {1, 3, 6}, {4, 7}});
    CHECK(ordered_set_partition(W("123")) == std::vector<PositionSet>{{1}, {2}, {3}});
}

TEST_CASE("convexification and standardization") {
    CHECK(convexify(W("44253136541")).to_string() == "44425533116");
    CHECK(convexify(W("121")).to_string() == "112");
    CHECK(standardize(W("44425533116")) == Permutation({4, 7, 8, 2, 5, 9, 3, 10, 1, 11, 6}));
    CHECK(standardize(W("112")).to_string() == "132");
    CHECK(standardize(W("122")).to_string() == "123");
    CHECK(standardize(W("3142")).to_string() == "3142");

    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>> by_data;
    for (const auto& w : enumerate_words(5, 3)) {
        FubiniWord c = convexify(w);
        CHECK(convexify(c) == c);
        // Convex: every redundant letter sits directly after a copy of itself.
        for (int j = 2; j <= c.n(); ++j)
            if (!c.is_initial(j)) CHECK(c[j - 1] == c[j]);
        std::vector<int> content(w.letters().begin(), w.letters().end());
        std::sort(content.begin(), content.end());
        Permutation perm = initial_permutation(w);
        auto pi = perm.one_line();
        auto key = std::make_pair(std::vector<int>(pi.begin(), pi.end()), content);
        auto [it, fresh] = by_data.emplace(key, vec(c.letters()));
        if (!fresh) CHECK(it->second == vec(c.letters()));
        Permutation s = standardize(w);
        CHECK(s.size() == w.n());
    }
}

TEST_CASE("permutations and the Ehresmann criterion") {
    CHECK(bruhat_leq(Permutation({1, 2}), Permutation({2, 1})));
    CHECK_FALSE(bruhat_leq(Permutation({2, 1}), Permutation({1, 2})));
    CHECK(bruhat_leq(Permutation({3, 1, 4, 2}), Permutation({4, 1, 3, 2})));
    CHECK(bruhat_covers(Permutation({1, 2}), Permutation({2, 1})));
    CHECK(bruhat_covers(Permutation({1, 2, 3, 4}), Permutation({1, 3, 2, 4})));
    CHECK_FALSE(bruhat_covers(Permutation({1, 2}), Permutation({1, 2})));
    CHECK_FALSE(bruhat_covers(Permutation({1, 2, 3}), Permutation({3, 2, 1})));
    CHECK(Permutation({3, 1, 4, 2}).inversions() == 3);
    CHECK_THROWS_AS(Permutation({1, 1}), DomainError);

    for (int n = 1; n <= 5; ++n) {
        auto [perms, leq] = oracle::bruhat_by_transpositions(n);
        for (std::size_t i = 0; i < perms.size(); ++i)
            for (std::size_t j = 0; j < perms.size(); ++j) {
                Permutation u(perms[i]);
                Permutation v(perms[j]);
                CHECK(bruhat_leq(u, v) == leq[i][j]);
                bool cover = leq[i][j] && oracle::inversions(perms[j]) == oracle::inversions(perms[i]) + 1;
                CHECK(bruhat_covers(u, v) == cover);
            }
    }
}

TEST_CASE("letter operations") {
    CHECK(swap_letters(W("1122"), 1, 2).to_string() == "2211");
    CHECK(replace_letter(W("31424"), 5, 2).to_string() == "31422");
    CHECK_THROWS_AS(replace_letter(W("123"), 1, 2), DomainError); // letter 1 would vanish
}

}
