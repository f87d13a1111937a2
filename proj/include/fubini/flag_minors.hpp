#ifndef FUBINI_FLAG_MINORS_HPP
#define FUBINI_FLAG_MINORS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "fubini/column_sets.hpp"
#include "fubini/pattern.hpp"

namespace fubini {

/// How the flag minor on columns J (rows 1..|J|) behaves on a cell.
enum class FlagClass { Sometimes, Truly, Unvanishing };

char to_char(FlagClass c); // 'S', 'T', 'U'
std::string to_string(FlagClass c);

/// Gale comparison of {alpha_1..alpha_h} against alpha_J(w), h = |J|.
FlagClass classify_flag_alpha(const FubiniWord& w, std::span<const int> cols);

/// Matching oracle on the pattern matrix: no perfect matching of rows [h]
/// into J over nonzero cells means Truly; Ones forming a permutation matrix
/// means Unvanishing; otherwise Sometimes.
FlagClass classify_flag_matching(const PatternMatrix& p, std::span<const int> cols);
FlagClass classify_flag_matching(const FubiniWord& w, std::span<const int> cols);

/// Partition of every indexed column set into S_w / T_w / U_w.
class FlagClassification {
public:
    FlagClassification(FubiniWord w, std::shared_ptr<const ColumnSetIndex> index, Bitset sometimes,
                       Bitset truly, Bitset unvanishing);

    [[nodiscard]] const FubiniWord& word() const { return word_; }
    [[nodiscard]] const ColumnSetIndex& index() const { return *index_; }
    [[nodiscard]] const std::shared_ptr<const ColumnSetIndex>& index_ptr() const { return index_; }
    [[nodiscard]] const Bitset& sometimes() const { return sometimes_; }
    [[nodiscard]] const Bitset& truly() const { return truly_; }
    [[nodiscard]] const Bitset& unvanishing() const { return unvanishing_; }
    [[nodiscard]] FlagClass at(std::size_t index) const;
    [[nodiscard]] FlagClass of(std::span<const int> cols) const { return at(index_->index_of(cols)); }

private:
    FubiniWord word_;
    std::shared_ptr<const ColumnSetIndex> index_;
    Bitset sometimes_;
    Bitset truly_;
    Bitset unvanishing_;
};

/// Runs the Alpha Test and the matching oracle on every indexed J. Any
/// disagreement throws InternalError naming the word, J and both answers.
FlagClassification classify_all(const FubiniWord& w, std::shared_ptr<const ColumnSetIndex> index);
FlagClassification classify_all(const FubiniWord& w);

struct RandomizedFlagResult {
    FlagClass estimate;
    int trials = 0;
    int vanishing_trials = 0;
    /// A point with a vanishing minor was constructed from a nonvanishing sample.
    bool zero_found = false;
    /// Upper bound on the probability that the estimate is wrong.
    double error_bound = 0.0;
};

/// Schwartz-Zippel oracle: evaluates the flag minor of U * (sampled P_w)
/// over the 2^61 - 1 field. For a nonvanishing sample it also searches for a
/// zero by solving the minor, which is affine in each Star, for one Star.
RandomizedFlagResult evaluate_flag_randomized(const FubiniWord& w, std::span<const int> cols, int trials,
                                              std::uint64_t seed);
RandomizedFlagResult evaluate_flag_randomized(const PatternMatrix& p, std::span<const int> cols, int trials,
                                              std::uint64_t seed);

/// v touches w: T_v and U_w are disjoint.
bool touches(const FlagClassification& v, const FlagClassification& w);
bool touches(const FubiniWord& v, const FubiniWord& w);

/// Medium roast order via containment T_v within T_w.
bool medium_leq(const FlagClassification& v, const FlagClassification& w);
bool medium_leq(const FubiniWord& v, const FubiniWord& w);
/// Medium roast order via the alpha criterion directly over every J.
bool medium_leq_alpha(const FubiniWord& v, const FubiniWord& w);
/// Prefix alpha multisets compared in Gale order for every h.
bool ehresmann_necessary(const FubiniWord& v, const FubiniWord& w);

/// Randomized test that the (I, J) minor vanishes on all of C_w.
bool general_minor_vanishes(const FubiniWord& w, std::span<const int> rows, std::span<const int> cols, int trials,
                            std::uint64_t seed);

/// Maximum rank of the top h rows on columns J over the cell.
int rank_w_h(const FubiniWord& w, int h, std::span<const int> cols);

} // namespace fubini

#endif
