#include "fubini/flag_minors.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "fubini/exact_linalg.hpp"

namespace fubini {

char to_char(FlagClass c) {
    switch (c) {
    case FlagClass::Sometimes: return 'S';
    case FlagClass::Truly: return 'T';
    case FlagClass::Unvanishing: return 'U';
    }
    return '?';
}

std::string to_string(FlagClass c) {
    switch (c) {
    case FlagClass::Sometimes: return "Sometimes";
    case FlagClass::Truly: return "Truly";
    case FlagClass::Unvanishing: return "Unvanishing";
    }
    return "?";
}

namespace {

void check_flag_columns(int n, int k, std::span<const int> cols) {
    if (cols.empty() || static_cast<int>(cols.size()) > k)
        throw DomainError("flag minor: need 1 <= |J| <= k");
    int prev = 0;
    for (int j : cols) {
        if (j <= prev || j > n) throw DomainError("flag minor: J must be an increasing subset of [n]");
        prev = j;
    }
}

void check_same_shape(const FubiniWord& v, const FubiniWord& w) {
    if (v.n() != w.n() || v.k() != w.k()) throw DomainError("words have different shapes (n,k)");
}

std::string describe(std::span<const int> cols) {
    std::string s = "{";
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cols[i]);
    }
    return s + "}";
}

} // namespace

FlagClass classify_flag_alpha(const FubiniWord& w, std::span<const int> cols) {
    check_flag_columns(w.n(), w.k(), cols);
    const int h = static_cast<int>(cols.size());
    PositionMultiset prefix = alpha_prefix(w, h);
    PositionMultiset aj = alpha_multiset(w, cols);
    if (prefix == aj) return FlagClass::Unvanishing;
    return gale_leq(prefix, aj) ? FlagClass::Sometimes : FlagClass::Truly;
}

FlagClass classify_flag_matching(const PatternMatrix& p, std::span<const int> cols) {
    check_flag_columns(p.cols(), p.rows(), cols);
    const int h = static_cast<int>(cols.size());
    if (generic_rank_prefix(p, h, cols) < h) return FlagClass::Truly;
    // Ones of M_w[[h], J] form a permutation matrix iff every column has its
    // One inside the top h rows and those rows are distinct.
    std::vector<char> used(static_cast<std::size_t>(h) + 1, 0);
    const FubiniWord& w = p.word();
    for (int j : cols) {
        int r = w[j];
        if (r > h || used[static_cast<std::size_t>(r)]) return FlagClass::Sometimes;
        used[static_cast<std::size_t>(r)] = 1;
    }
    return FlagClass::Unvanishing;
}

FlagClass classify_flag_matching(const FubiniWord& w, std::span<const int> cols) {
    return classify_flag_matching(PatternMatrix(w), cols);
}

// ------------------------------------------------------- FlagClassification

FlagClassification::FlagClassification(FubiniWord w, std::shared_ptr<const ColumnSetIndex> index, Bitset sometimes,
                                       Bitset truly, Bitset unvanishing)
    : word_(std::move(w)), index_(std::move(index)), sometimes_(std::move(sometimes)), truly_(std::move(truly)),
      unvanishing_(std::move(unvanishing)) {}

FlagClass FlagClassification::at(std::size_t index) const {
    if (truly_.test(index)) return FlagClass::Truly;
    if (unvanishing_.test(index)) return FlagClass::Unvanishing;
    return FlagClass::Sometimes;
}

FlagClassification classify_all(const FubiniWord& w, std::shared_ptr<const ColumnSetIndex> index) {
    if (index->n() != w.n() || index->k() != w.k()) throw DomainError("classify_all: index shape mismatch");
    PatternMatrix p(w);
    Bitset s(index->size());
    Bitset t(index->size());
    Bitset u(index->size());
    for (std::size_t i = 0; i < index->size(); ++i) {
        const PositionSet& cols = index->at(i);
        FlagClass by_alpha = classify_flag_alpha(w, cols);
        FlagClass by_matching = classify_flag_matching(p, cols);
        if (by_alpha != by_matching) {
            std::ostringstream msg;
            msg << "flag classification disagreement: w=" << w.to_string() << " J=" << describe(cols)
                << " alpha=" << to_string(by_alpha) << " matching=" << to_string(by_matching) << "\n"
                << p.to_string();
            throw InternalError(msg.str());
        }
        switch (by_alpha) {
        case FlagClass::Sometimes: s.set(i); break;
        case FlagClass::Truly: t.set(i); break;
        case FlagClass::Unvanishing: u.set(i); break;
        }
    }
    return FlagClassification(w, std::move(index), std::move(s), std::move(t), std::move(u));
}

FlagClassification classify_all(const FubiniWord& w) {
    return classify_all(w, std::make_shared<const ColumnSetIndex>(w.n(), w.k()));
}

// ---------------------------------------------------------------- randomized

namespace {

std::uint64_t top_minor(const PrimeFieldMatrix& unitri, const PrimeFieldMatrix& sample, std::span<const int> rows,
                        std::span<const int> cols) {
    // (U * A)[rows, cols] = U[rows, :] * A[:, cols]
    std::vector<int> all(static_cast<std::size_t>(unitri.cols()));
    for (int i = 1; i <= unitri.cols(); ++i) all[static_cast<std::size_t>(i - 1)] = i;
    return det(unitri.submatrix(rows, all) * sample.submatrix(all, cols));
}

} // namespace

RandomizedFlagResult evaluate_flag_randomized(const PatternMatrix& p, std::span<const int> cols, int trials,
                                              std::uint64_t seed) {
    check_flag_columns(p.cols(), p.rows(), cols);
    if (trials < 1) throw DomainError("evaluate_flag_randomized: trials must be positive");
    const int h = static_cast<int>(cols.size());
    std::vector<int> rows(static_cast<std::size_t>(h));
    for (int r = 1; r <= h; ++r) rows[static_cast<std::size_t>(r - 1)] = r;

    PrimeField field;
    std::mt19937_64 rng(seed);
    RandomizedFlagResult result{FlagClass::Unvanishing};
    result.trials = trials;
    bool searched = false;
    for (int t = 0; t < trials; ++t) {
        PrimeFieldMatrix u = random_unitriangular(p.rows(), field, rng);
        PrimeFieldMatrix a = sample_from_pattern(p, field, rng);
        std::uint64_t d = top_minor(u, a, rows, cols);
        if (d == 0) {
            ++result.vanishing_trials;
            continue;
        }
        if (searched) continue;
        searched = true;
        // The minor is affine in each Star entry: d(x) = slope * x + d(0).
        for (int r : rows) {
            for (int c : cols) {
                if (p.at(r, c) != Cell::Star) continue;
                PrimeFieldMatrix probe = a;
                probe(r, c) = 0;
                std::uint64_t d0 = top_minor(u, probe, rows, cols);
                probe(r, c) = 1;
                std::uint64_t slope = field.sub(top_minor(u, probe, rows, cols), d0);
                if (slope == 0) continue;
                probe(r, c) = field.mul(field.neg(d0), field.inv(slope));
                if (top_minor(u, probe, rows, cols) == 0) {
                    result.zero_found = true;
                    break;
                }
            }
            if (result.zero_found) break;
        }
    }
    const double per_trial = 2.0 * h / static_cast<double>(field.modulus());
    if (result.vanishing_trials == trials) {
        result.estimate = FlagClass::Truly;
        result.error_bound = std::pow(per_trial, trials);
    } else if (result.vanishing_trials > 0 || result.zero_found) {
        result.estimate = FlagClass::Sometimes;
        result.error_bound = 0.0;
    } else {
        result.estimate = FlagClass::Unvanishing;
        result.error_bound = per_trial * h * h;
    }
    return result;
}

RandomizedFlagResult evaluate_flag_randomized(const FubiniWord& w, std::span<const int> cols, int trials,
                                              std::uint64_t seed) {
    return evaluate_flag_randomized(PatternMatrix(w), cols, trials, seed);
}

// ------------------------------------------------------------------- orders

bool touches(const FlagClassification& v, const FlagClassification& w) {
    check_same_shape(v.word(), w.word());
    return !v.truly().intersects(w.unvanishing());
}

bool touches(const FubiniWord& v, const FubiniWord& w) {
    check_same_shape(v, w);
    auto index = std::make_shared<const ColumnSetIndex>(v.n(), v.k());
    return touches(classify_all(v, index), classify_all(w, index));
}

bool medium_leq(const FlagClassification& v, const FlagClassification& w) {
    check_same_shape(v.word(), w.word());
    return v.truly().is_subset_of(w.truly());
}

bool medium_leq(const FubiniWord& v, const FubiniWord& w) {
    check_same_shape(v, w);
    auto index = std::make_shared<const ColumnSetIndex>(v.n(), v.k());
    return medium_leq(classify_all(v, index), classify_all(w, index));
}

bool medium_leq_alpha(const FubiniWord& v, const FubiniWord& w) {
    check_same_shape(v, w);
    ColumnSetIndex index(v.n(), v.k());
    for (std::size_t i = 0; i < index.size(); ++i) {
        const PositionSet& cols = index.at(i);
        const int h = static_cast<int>(cols.size());
        if (gale_leq(alpha_prefix(w, h), alpha_multiset(w, cols)) &&
            !gale_leq(alpha_prefix(v, h), alpha_multiset(v, cols)))
            return false;
    }
    return true;
}

bool ehresmann_necessary(const FubiniWord& v, const FubiniWord& w) {
    check_same_shape(v, w);
    for (int h = 1; h <= v.k(); ++h)
        if (!gale_leq(alpha_prefix(v, h), alpha_prefix(w, h))) return false;
    return true;
}

bool general_minor_vanishes(const FubiniWord& w, std::span<const int> rows, std::span<const int> cols, int trials,
                            std::uint64_t seed) {
    if (rows.size() != cols.size() || rows.empty()) throw DomainError("general_minor_vanishes: |I| != |J|");
    for (int r : rows)
        if (r < 1 || r > w.k()) throw DomainError("general_minor_vanishes: row out of range");
    for (int c : cols)
        if (c < 1 || c > w.n()) throw DomainError("general_minor_vanishes: column out of range");
    if (trials < 1) throw DomainError("general_minor_vanishes: trials must be positive");
    PatternMatrix p(w);
    PrimeField field;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        PrimeFieldMatrix u = random_unitriangular(w.k(), field, rng);
        PrimeFieldMatrix a = sample_from_pattern(p, field, rng);
        if (top_minor(u, a, rows, cols) != 0) return false;
    }
    return true;
}

int rank_w_h(const FubiniWord& w, int h, std::span<const int> cols) {
    return generic_rank_prefix(PatternMatrix(w), h, cols);
}

} // namespace fubini
