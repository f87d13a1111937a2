#ifndef FUBINI_WORD_HPP
#define FUBINI_WORD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fubini/error.hpp"

namespace fubini {

/// Sorted set of 1-based positions.
using PositionSet = std::vector<int>;

/// Multiset of positive integers kept in sorted order so that equality and
/// Gale comparison are elementwise.
class PositionMultiset {
public:
    PositionMultiset() = default;
    explicit PositionMultiset(std::vector<int> values);

    [[nodiscard]] std::span<const int> values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }

    friend bool operator==(const PositionMultiset&, const PositionMultiset&) = default;

private:
    std::vector<int> values_;
};

/// Gale order on equal-size multisets: sorted(a)_i <= sorted(b)_i for all i.
bool gale_leq(const PositionMultiset& a, const PositionMultiset& b);

/// A bijection of [m] in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int m);

    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
    /// Value at 1-based position i.
    [[nodiscard]] int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
    [[nodiscard]] std::span<const int> one_line() const { return values_; }
    [[nodiscard]] int inversions() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

/// Ehresmann criterion: prefix value sets compared in Gale order.
bool bruhat_leq(const Permutation& u, const Permutation& v);
/// u <= v, v differs from u by swapping two values, and inv(v) = inv(u) + 1.
bool bruhat_covers(const Permutation& u, const Permutation& v);

/// A surjection [n] -> [k] in one-line notation. Letters and positions are
/// 1-based at every interface.
class FubiniWord {
public:
    FubiniWord(std::vector<int> letters, int k);
    explicit FubiniWord(std::vector<int> letters);

    [[nodiscard]] int n() const { return static_cast<int>(letters_.size()); }
    [[nodiscard]] int k() const { return k_; }
    /// Letter at 1-based position j.
    [[nodiscard]] int operator[](int j) const { return letters_[static_cast<std::size_t>(j - 1)]; }
    [[nodiscard]] std::span<const int> letters() const { return letters_; }

    /// alpha()[i-1] is the position of the first occurrence of letter i.
    [[nodiscard]] std::span<const int> alpha() const { return alpha_; }
    [[nodiscard]] int alpha(int letter) const { return alpha_[static_cast<std::size_t>(letter - 1)]; }
    [[nodiscard]] bool is_initial(int j) const { return alpha((*this)[j]) == j; }

    /// Digit form when k <= 9, comma-separated otherwise.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FubiniWord& a, const FubiniWord& b) {
        return a.k_ == b.k_ && a.letters_ == b.letters_;
    }
    friend std::strong_ordering operator<=>(const FubiniWord& a, const FubiniWord& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<int> letters_;
    int k_ = 0;
    std::vector<int> alpha_;
};

FubiniWord parse_word(std::string_view text, std::optional<int> k = std::nullopt);

/// Calls visit(w) for every w in W_{n,k} in lexicographic order.
void for_each_word(int n, int k, const std::function<void(const FubiniWord&)>& visit);
std::vector<FubiniWord> enumerate_words(int n, int k);
/// k! * S(n,k), exact for the sizes this library handles.
std::uint64_t fubini_count(int n, int k);

/// The identity-prefixed word 12...k k^{n-k}.
FubiniWord top_cell_word(int n, int k);

std::vector<int> alpha_vector(const FubiniWord& w);
PositionMultiset alpha_multiset(const FubiniWord& w, std::span<const int> positions);
/// {alpha_1, ..., alpha_h} as a multiset.
PositionMultiset alpha_prefix(const FubiniWord& w, int h);
Permutation initial_permutation(const FubiniWord& w);
std::vector<PositionSet> beta_chain(const FubiniWord& w);
FubiniWord convexify(const FubiniWord& w);
Permutation standardize(const FubiniWord& w);
std::vector<PositionSet> ordered_set_partition(const FubiniWord& w);

/// Interchanges letter values a and b throughout w (t_{ab} w).
FubiniWord swap_letters(const FubiniWord& w, int a, int b);
/// Replaces the letter at position j.
FubiniWord replace_letter(const FubiniWord& w, int j, int letter);

} // namespace fubini

#endif
