#include "fubini/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace fubini {

PositionMultiset::PositionMultiset(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

bool gale_leq(const PositionMultiset& a, const PositionMultiset& b) {
    if (a.size() != b.size())
        throw DomainError("gale_leq: multisets of different sizes");
    auto av = a.values();
    auto bv = b.values();
    for (std::size_t i = 0; i < av.size(); ++i)
        if (av[i] > bv[i]) return false;
    return true;
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
    const int m = size();
    if (m == 0) throw DomainError("permutation: empty");
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int v : values_) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v)])
            throw DomainError("permutation: not a bijection of [m]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

int Permutation::inversions() const {
    int count = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        for (std::size_t j = i + 1; j < values_.size(); ++j)
            if (values_[i] > values_[j]) ++count;
    return count;
}

std::string Permutation::to_string() const {
    bool digits = size() <= 9;
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(values_[i]);
    }
    return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw DomainError("bruhat_leq: size mismatch");
    std::vector<int> a;
    std::vector<int> b;
    for (int i = 1; i <= u.size(); ++i) {
        a.insert(std::upper_bound(a.begin(), a.end(), u(i)), u(i));
        b.insert(std::upper_bound(b.begin(), b.end(), v(i)), v(i));
        for (std::size_t t = 0; t < a.size(); ++t)
            if (a[t] > b[t]) return false;
    }
    return true;
}

bool bruhat_covers(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw DomainError("bruhat_covers: size mismatch");
    int differing = 0;
    for (int i = 1; i <= u.size(); ++i)
        if (u(i) != v(i)) ++differing;
    if (differing != 2) return false;
    return v.inversions() == u.inversions() + 1 && bruhat_leq(u, v);
}

// ----------------------------------------------------------------- FubiniWord

FubiniWord::FubiniWord(std::vector<int> letters, int k) : letters_(std::move(letters)), k_(k) {
    const int n = static_cast<int>(letters_.size());
    if (n == 0) throw DomainError("word: empty");
    if (k_ < 1 || k_ > n) throw DomainError("word: need 1 <= k <= n");
    alpha_.assign(static_cast<std::size_t>(k_), 0);
    for (int j = 1; j <= n; ++j) {
        int letter = letters_[static_cast<std::size_t>(j - 1)];
        if (letter < 1 || letter > k_)
            throw DomainError("word: letter " + std::to_string(letter) + " outside [1," +
                              std::to_string(k_) + "]");
        int& first = alpha_[static_cast<std::size_t>(letter - 1)];
        if (first == 0) first = j;
    }
    for (int i = 0; i < k_; ++i)
        if (alpha_[static_cast<std::size_t>(i)] == 0)
            throw DomainError("word: letter " + std::to_string(i + 1) + " missing (not surjective)");
}

FubiniWord::FubiniWord(std::vector<int> letters)
    : FubiniWord(letters, letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end())) {}

std::string FubiniWord::to_string() const {
    bool digits = k_ <= 9;
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(letters_[i]);
    }
    return out;
}

FubiniWord parse_word(std::string_view text, std::optional<int> k) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\n'))
        text.remove_suffix(1);
    if (text.empty()) throw DomainError("parse_word: empty input");

    std::vector<int> letters;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) end = text.size();
            auto field = text.substr(start, end - start);
            int value = 0;
            auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
            if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value < 1)
                throw DomainError("parse_word: malformed field '" + std::string(field) + "'");
            letters.push_back(value);
            start = end + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw DomainError(std::string("parse_word: unexpected character '") + c + "'");
            letters.push_back(c - '0');
        }
        if (k && *k > 9) throw DomainError("parse_word: digit form requires k <= 9");
    }
    int max_letter = *std::max_element(letters.begin(), letters.end());
    int alphabet = k.value_or(max_letter);
    if (max_letter > alphabet)
        throw DomainError("parse_word: letter " + std::to_string(max_letter) + " exceeds k=" +
                          std::to_string(alphabet));
    return FubiniWord(std::move(letters), alphabet);
}

namespace {

void place_letters(int n, int k, std::vector<int>& letters, std::vector<int>& counts, int missing,
                   const std::function<void(const FubiniWord&)>& visit) {
    int pos = static_cast<int>(letters.size());
    if (pos == n) {
        visit(FubiniWord(letters, k));
        return;
    }
    int remaining_after = n - pos - 1;
    for (int letter = 1; letter <= k; ++letter) {
        int& c = counts[static_cast<std::size_t>(letter)];
        int still_missing = missing - (c == 0 ? 1 : 0);
        if (still_missing > remaining_after) continue;
        ++c;
        letters.push_back(letter);
        place_letters(n, k, letters, counts, still_missing, visit);
        letters.pop_back();
        --c;
    }
}

} // namespace

void for_each_word(int n, int k, const std::function<void(const FubiniWord&)>& visit) {
    if (k < 1 || k > n) throw DomainError("enumerate_words: need 1 <= k <= n");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(n));
    std::vector<int> counts(static_cast<std::size_t>(k) + 1, 0);
    place_letters(n, k, letters, counts, k, visit);
}

std::vector<FubiniWord> enumerate_words(int n, int k) {
    std::vector<FubiniWord> out;
    for_each_word(n, k, [&](const FubiniWord& w) { out.push_back(w); });
    return out;
}

std::uint64_t fubini_count(int n, int k) {
    if (k < 1 || k > n) return 0;
    // Surjections satisfy s(n,k) = k * (s(n-1,k-1) + s(n-1,k)).
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    s[0][0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= std::min(m, k); ++j)
            s[m][j] = static_cast<std::uint64_t>(j) * (s[m - 1][j - 1] + s[m - 1][j]);
    return s[n][k];
}

FubiniWord top_cell_word(int n, int k) {
    std::vector<int> letters(static_cast<std::size_t>(n), k);
    for (int i = 1; i <= k; ++i) letters[static_cast<std::size_t>(i - 1)] = i;
    return FubiniWord(std::move(letters), k);
}

std::vector<int> alpha_vector(const FubiniWord& w) {
    auto a = w.alpha();
    return {a.begin(), a.end()};
}

PositionMultiset alpha_multiset(const FubiniWord& w, std::span<const int> positions) {
    std::vector<int> values;
    values.reserve(positions.size());
    for (int j : positions) {
        if (j < 1 || j > w.n()) throw DomainError("alpha_multiset: position out of range");
        values.push_back(w.alpha(w[j]));
    }
    return PositionMultiset(std::move(values));
}

PositionMultiset alpha_prefix(const FubiniWord& w, int h) {
    if (h < 0 || h > w.k()) throw DomainError("alpha_prefix: h out of range");
    auto a = w.alpha();
    return PositionMultiset(std::vector<int>(a.begin(), a.begin() + h));
}

Permutation initial_permutation(const FubiniWord& w) {
    std::vector<int> pi;
    pi.reserve(static_cast<std::size_t>(w.k()));
    for (int j = 1; j <= w.n(); ++j)
        if (w.is_initial(j)) pi.push_back(w[j]);
    return Permutation(std::move(pi));
}

std::vector<PositionSet> beta_chain(const FubiniWord& w) {
    Permutation pi = initial_permutation(w);
    // rank_of[letter] = i such that pi_i = letter
    std::vector<int> rank_of(static_cast<std::size_t>(w.k()) + 1, 0);
    for (int i = 1; i <= w.k(); ++i) rank_of[static_cast<std::size_t>(pi(i))] = i;
    std::vector<PositionSet> beta(static_cast<std::size_t>(w.k()));
    for (int i = 1; i <= w.k(); ++i)
        for (int j = 1; j <= w.n(); ++j)
            if (rank_of[static_cast<std::size_t>(w[j])] <= i) beta[static_cast<std::size_t>(i - 1)].push_back(j);
    return beta;
}

FubiniWord convexify(const FubiniWord& w) {
    Permutation pi = initial_permutation(w);
    std::vector<int> counts(static_cast<std::size_t>(w.k()) + 1, 0);
    for (int letter : w.letters()) ++counts[static_cast<std::size_t>(letter)];
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(w.n()));
    for (int i = 1; i <= w.k(); ++i)
        letters.insert(letters.end(), static_cast<std::size_t>(counts[static_cast<std::size_t>(pi(i))]), pi(i));
    return FubiniWord(std::move(letters), w.k());
}

Permutation standardize(const FubiniWord& w) {
    std::vector<int> out(w.letters().begin(), w.letters().end());
    int next = w.k() + 1;
    for (int j = 1; j <= w.n(); ++j)
        if (!w.is_initial(j)) out[static_cast<std::size_t>(j - 1)] = next++;
    return Permutation(std::move(out));
}

std::vector<PositionSet> ordered_set_partition(const FubiniWord& w) {
    std::vector<PositionSet> blocks(static_cast<std::size_t>(w.k()));
    for (int j = 1; j <= w.n(); ++j) blocks[static_cast<std::size_t>(w[j] - 1)].push_back(j);
    return blocks;
}

FubiniWord swap_letters(const FubiniWord& w, int a, int b) {
    std::vector<int> letters(w.letters().begin(), w.letters().end());
    for (int& x : letters) {
        if (x == a)
            x = b;
        else if (x == b)
            x = a;
    }
    return FubiniWord(std::move(letters), w.k());
}

FubiniWord replace_letter(const FubiniWord& w, int j, int letter) {
    if (j < 1 || j > w.n()) throw DomainError("replace_letter: position out of range");
    std::vector<int> letters(w.letters().begin(), w.letters().end());
    letters[static_cast<std::size_t>(j - 1)] = letter;
    return FubiniWord(std::move(letters), w.k());
}

} // namespace fubini
