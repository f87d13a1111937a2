#include "fubini/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "fubini/essential.hpp"
#include "fubini/io.hpp"
#include "fubini/orders.hpp"

namespace fubini {

using nlohmann::json;

std::string to_string(SuiteStatus status) {
    switch (status) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Finding: return "finding";
    case SuiteStatus::Skipped: return "skipped";
    }
    return "?";
}

bool VerifyReport::any_failure() const {
    return std::any_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.status == SuiteStatus::Fail; });
}

const SuiteResult* VerifyReport::find(const std::string& name) const {
    for (const auto& s : suites)
        if (s.name == name) return &s;
    return nullptr;
}

json VerifyReport::to_json() const {
    json out{{"n", n}, {"k", k}, {"seed", seed}, {"trials", trials}};
    json list = json::array();
    for (const auto& s : suites)
        list.push_back({{"name", s.name}, {"status", to_string(s.status)}, {"summary", s.summary}, {"details", s.details}});
    out["suites"] = std::move(list);
    out["failed"] = any_failure();
    return out;
}

namespace {

constexpr std::size_t kMaxExamples = 5;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (a + 1) + 0xBF58476D1CE4E5B9ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

json set_json(std::span<const int> s) { return json(std::vector<int>(s.begin(), s.end())); }

/// Shared per-(n,k) data, built on first use.
class Context {
public:
    explicit Context(const VerifyOptions& opts) : opts_(opts), index_(std::make_shared<const ColumnSetIndex>(opts.n, opts.k)) {
        words_ = enumerate_words(opts.n, opts.k);
    }

    [[nodiscard]] int n() const { return opts_.n; }
    [[nodiscard]] int k() const { return opts_.k; }
    [[nodiscard]] std::uint64_t seed() const { return opts_.seed; }
    [[nodiscard]] int trials() const { return opts_.trials; }
    [[nodiscard]] const std::vector<FubiniWord>& words() const { return words_; }
    [[nodiscard]] std::size_t size() const { return words_.size(); }
    [[nodiscard]] const std::shared_ptr<const ColumnSetIndex>& index() const { return index_; }
    [[nodiscard]] bool within_budget() const { return words_.size() <= opts_.budget; }

    const std::vector<FlagClassification>& classes() {
        if (classes_.empty())
            for (const auto& w : words_) classes_.push_back(classify_all(w, index_));
        return classes_;
    }
    const std::vector<RankedEssentialSet>& ess() {
        if (ess_.empty())
            for (const auto& w : words_) ess_.push_back(ranked_essential_set(w));
        return ess_;
    }
    const Poset& poset(OrderKind kind) {
        auto& slot = posets_[kind];
        if (!slot) slot = build_poset(n(), k(), kind, {opts_.budget});
        return *slot;
    }
    int index_of(const FubiniWord& w) const {
        auto it = std::lower_bound(words_.begin(), words_.end(), w);
        return (it != words_.end() && *it == w) ? static_cast<int>(it - words_.begin()) : -1;
    }

private:
    VerifyOptions opts_;
    std::shared_ptr<const ColumnSetIndex> index_;
    std::vector<FubiniWord> words_;
    std::vector<FlagClassification> classes_;
    std::vector<RankedEssentialSet> ess_;
    std::map<OrderKind, std::optional<Poset>> posets_;
};

/// Collects a bounded list of counterexamples and a violation count.
class Violations {
public:
    void add(json example) {
        ++count_;
        if (examples_.size() < kMaxExamples) examples_.push_back(std::move(example));
    }
    [[nodiscard]] std::size_t count() const { return count_; }
    void finish(SuiteResult& r, const std::string& what, std::size_t checked) const {
        r.details["checked"] = checked;
        r.details["violations"] = count_;
        if (count_ > 0) {
            r.status = SuiteStatus::Fail;
            r.details["counterexamples"] = examples_;
            r.summary = std::to_string(count_) + " violation(s) of " + what;
        } else {
            r.summary = what + ": " + std::to_string(checked) + " checks";
        }
    }

private:
    std::size_t count_ = 0;
    json examples_ = json::array();
};

SuiteResult skipped(const std::string& name, const std::string& why) {
    SuiteResult r{name, SuiteStatus::Skipped, why};
    return r;
}

// ------------------------------------------------------------------- suites

SuiteResult suite_words(Context& ctx) {
    SuiteResult r{"words", SuiteStatus::Pass, {}};
    Violations v;
    std::size_t checked = 0;
    if (ctx.size() != fubini_count(ctx.n(), ctx.k()))
        v.add({{"check", "count"}, {"got", ctx.size()}, {"expected", fubini_count(ctx.n(), ctx.k())}});
    for (std::size_t i = 1; i < ctx.size(); ++i)
        if (!(ctx.words()[i - 1] < ctx.words()[i])) v.add({{"check", "lex order"}, {"at", i}});
    for (const auto& w : ctx.words()) {
        ++checked;
        for (int letter = 1; letter <= w.k(); ++letter) {
            int a = w.alpha(letter);
            if (w[a] != letter || !w.is_initial(a)) v.add({{"check", "alpha"}, {"w", w.to_string()}});
        }
        FubiniWord c = convexify(w);
        if (!(convexify(c) == c)) v.add({{"check", "conv idempotent"}, {"w", w.to_string()}});
        if (!(initial_permutation(c) == initial_permutation(w)))
            v.add({{"check", "conv keeps pi"}, {"w", w.to_string()}});
        Permutation s = standardize(w);
        for (int j = 1; j <= w.n(); ++j)
            if (w.is_initial(j) && s(j) != w[j]) v.add({{"check", "std on initial positions"}, {"w", w.to_string()}});
    }
    if (ctx.size() <= 2000) {
        auto content = [](const FubiniWord& w) {
            std::vector<int> c(w.letters().begin(), w.letters().end());
            std::sort(c.begin(), c.end());
            return c;
        };
        for (const auto& a : ctx.words())
            for (const auto& b : ctx.words()) {
                ++checked;
                bool same_conv = convexify(a) == convexify(b);
                bool same_data = initial_permutation(a) == initial_permutation(b) && content(a) == content(b);
                if (same_conv != same_data) v.add({{"check", "conv equivalence"}, {"v", a.to_string()}, {"w", b.to_string()}});
            }
    }
    v.finish(r, "word invariants", checked);
    return r;
}

SuiteResult suite_pattern(Context& ctx) {
    SuiteResult r{"pattern", SuiteStatus::Pass, {}};
    Violations v;
    const FubiniWord top = top_cell_word(ctx.n(), ctx.k());
    for (const auto& w : ctx.words()) {
        PatternMatrix p(w);
        for (int c = 1; c <= w.n(); ++c) {
            int ones = 0;
            for (int row = 1; row <= w.k(); ++row) {
                Cell cell = p.at(row, c);
                if (cell == Cell::One) ++ones;
                if (cell == Cell::Star && !(w.alpha(row) < w.alpha(w[c])))
                    v.add({{"check", "star row alpha"}, {"w", w.to_string()}, {"cell", {row, c}}});
            }
            if (ones != 1 || p.at(w[c], c) != Cell::One) v.add({{"check", "one per column"}, {"w", w.to_string()}});
        }
        for (int row = 1; row <= w.k(); ++row) {
            bool has_one = false;
            for (int c = 1; c <= w.n(); ++c) has_one |= p.at(row, c) == Cell::One;
            if (!has_one) v.add({{"check", "one per row"}, {"w", w.to_string()}});
        }
        int codim = codimension(w);
        if (codim < 0 || ((codim == 0) != (w == top)))
            v.add({{"check", "codim zero exactly at top cell"}, {"w", w.to_string()}, {"codim", codim}});
    }
    v.finish(r, "pattern matrix invariants", ctx.size());
    return r;
}

SuiteResult suite_poincare(Context& ctx) {
    SuiteResult r{"poincare", SuiteStatus::Pass, {}};
    IntPolynomial lhs = poincare_polynomial(ctx.n(), ctx.k());
    IntPolynomial rhs = q_factorial(ctx.k()) * reverse(q_stirling(ctx.n(), ctx.k()));
    IntPolynomial dim_lhs = dim_polynomial(ctx.n(), ctx.k());
    IntPolynomial dim_rhs = q_factorial(ctx.k()) * q_stirling(ctx.n(), ctx.k());
    r.details = {{"codim_sum", lhs.to_string()},
                 {"factorial_times_rev_stirling", rhs.to_string()},
                 {"dim_sum", dim_lhs.to_string()}};
    if (!(lhs == rhs) || !(dim_lhs == dim_rhs)) {
        r.status = SuiteStatus::Fail;
        r.summary = "generating function identity fails";
    } else {
        r.summary = "sum q^codim = " + lhs.to_string();
    }
    return r;
}

SuiteResult suite_flag_triangle(Context& ctx) {
    SuiteResult r{"flag-triangle", SuiteStatus::Pass, {}};
    Violations v;
    std::size_t randomized_disagreements = 0;
    std::size_t checked = 0;
    const auto& index = *ctx.index();
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const FubiniWord& w = ctx.words()[a];
        PatternMatrix p(w);
        for (std::size_t j = 0; j < index.size(); ++j) {
            const PositionSet& cols = index.at(j);
            FlagClass alpha = classify_flag_alpha(w, cols);
            FlagClass matching = classify_flag_matching(p, cols);
            FlagClass randomized = evaluate_flag_randomized(p, cols, ctx.trials(), mix_seed(ctx.seed(), a, j)).estimate;
            ++checked;
            if (alpha == matching && alpha == randomized) continue;
            json example{{"w", w.to_string()},
                         {"J", set_json(cols)},
                         {"alpha", to_string(alpha)},
                         {"matching", to_string(matching)},
                         {"randomized", to_string(randomized)}};
            if (alpha != matching || ctx.trials() >= 10)
                v.add(std::move(example));
            else
                ++randomized_disagreements;
        }
    }
    r.details["low_trial_warnings"] = randomized_disagreements;
    v.finish(r, "alpha/matching/randomized agreement", checked);
    return r;
}

SuiteResult suite_partition(Context& ctx) {
    SuiteResult r{"partition", SuiteStatus::Pass, {}};
    Violations v;
    for (const auto& c : ctx.classes()) {
        const Bitset& s = c.sometimes();
        const Bitset& t = c.truly();
        const Bitset& u = c.unvanishing();
        bool disjoint = !s.intersects(t) && !s.intersects(u) && !t.intersects(u);
        bool exhaustive = (s | t | u).count() == c.index().size();
        if (!disjoint || !exhaustive) v.add({{"w", c.word().to_string()}});
    }
    v.finish(r, "S/T/U partition", ctx.size());
    return r;
}

SuiteResult suite_rank_lemma(Context& ctx) {
    SuiteResult r{"rank-lemma", SuiteStatus::Pass, {}};
    Violations v;
    std::size_t checked = 0;
    const auto& index = *ctx.index();
    for (const auto& c : ctx.classes()) {
        const FubiniWord& w = c.word();
        PatternMatrix p(w);
        for (int h = 1; h <= w.k(); ++h) {
            for (std::uint32_t mask = 1; mask < (1U << w.n()); ++mask) {
                if (std::popcount(mask) > h) continue;
                PositionSet cols;
                for (int j = 0; j < w.n(); ++j)
                    if (mask >> j & 1U) cols.push_back(j + 1);
                bool deficient = generic_rank_prefix(p, h, cols) < static_cast<int>(cols.size());
                bool all_truly = true;
                for (std::size_t i = 0; i < index.size(); ++i) {
                    if (static_cast<int>(index.at(i).size()) != h || (index.mask(i) & mask) != mask) continue;
                    if (c.at(i) != FlagClass::Truly) {
                        all_truly = false;
                        break;
                    }
                }
                ++checked;
                if (deficient != all_truly)
                    v.add({{"w", w.to_string()}, {"h", h}, {"J", set_json(cols)}, {"rank_deficient", deficient}});
            }
        }
    }
    v.finish(r, "rank deficiency iff all h-supersets truly vanish", checked);
    return r;
}

void for_each_subset(int universe, int size, const std::function<void(const PositionSet&)>& f) {
    for (std::uint32_t mask = 0; mask < (1U << universe); ++mask) {
        if (std::popcount(mask) != size) continue;
        PositionSet s;
        for (int j = 0; j < universe; ++j)
            if (mask >> j & 1U) s.push_back(j + 1);
        f(s);
    }
}

SuiteResult suite_minor_lemmas(Context& ctx) {
    if (ctx.n() > 4) return skipped("minor-lemmas", "general minors are swept for n <= 4");
    SuiteResult r{"minor-lemmas", SuiteStatus::Pass, {}};
    Violations v;
    std::size_t checked = 0;
    std::size_t vanishing = 0;
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const FubiniWord& w = ctx.words()[a];
        const FlagClassification& c = ctx.classes()[a];
        std::map<std::pair<PositionSet, PositionSet>, bool> vanishes;
        std::uint64_t counter = 0;
        auto test = [&](const PositionSet& rows, const PositionSet& cols) {
            if (rows.empty()) return false; // the empty minor is 1
            auto key = std::make_pair(rows, cols);
            if (auto it = vanishes.find(key); it != vanishes.end()) return it->second;
            bool z = general_minor_vanishes(w, rows, cols, ctx.trials(), mix_seed(ctx.seed(), a, ++counter));
            vanishes.emplace(key, z);
            return z;
        };
        for (int size = 1; size <= w.k(); ++size) {
            for_each_subset(w.k(), size, [&](const PositionSet& rows) {
                for_each_subset(w.n(), size, [&](const PositionSet& cols) {
                    ++checked;
                    if (!test(rows, cols)) return;
                    ++vanishing;
                    // Vanishing general minors force J into T_w.
                    if (c.of(cols) != FlagClass::Truly)
                        v.add({{"check", "vanishing minor implies J truly"}, {"w", w.to_string()},
                               {"I", set_json(rows)}, {"J", set_json(cols)}});
                    // Lex-smaller row sets vanish too.
                    for_each_subset(w.k(), size, [&](const PositionSet& lower) {
                        if (lower < rows && !test(lower, cols))
                            v.add({{"check", "lex-smaller rows vanish"}, {"w", w.to_string()},
                                   {"I", set_json(rows)}, {"H", set_json(lower)}, {"J", set_json(cols)}});
                    });
                    // Either every (I - h, J - j) minor vanishes, or every
                    // h-superset of J is truly vanishing.
                    const int h = rows.back();
                    PositionSet rest(rows.begin(), rows.end() - 1);
                    bool upper_all = true;
                    for (std::size_t drop = 0; drop < cols.size() && upper_all; ++drop) {
                        PositionSet sub = cols;
                        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                        upper_all = test(rest, sub);
                    }
                    bool supersets_truly = true;
                    const auto& index = c.index();
                    std::uint32_t jmask = 0;
                    for (int j : cols) jmask |= 1U << (j - 1);
                    for (std::size_t i = 0; i < index.size() && supersets_truly; ++i)
                        if (static_cast<int>(index.at(i).size()) == h && (index.mask(i) & jmask) == jmask)
                            supersets_truly = c.at(i) == FlagClass::Truly;
                    if (!upper_all && !supersets_truly)
                        v.add({{"check", "upper minors or truly supersets"}, {"w", w.to_string()},
                               {"I", set_json(rows)}, {"J", set_json(cols)}});
                });
            });
        }
    }
    r.details["vanishing_minors"] = vanishing;
    v.finish(r, "general minor lemmas", checked);
    return r;
}

SuiteResult suite_sample_minors(Context& ctx) {
    SuiteResult r{"sample-minors", SuiteStatus::Pass, {}};
    Violations v;
    std::size_t checked = 0;
    const auto& index = *ctx.index();
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const FlagClassification& c = ctx.classes()[a];
        PatternMatrix p(c.word());
        for (std::uint64_t s = 0; s < 5; ++s) {
            std::mt19937_64 rng(mix_seed(ctx.seed(), a, s));
            RationalMatrix sample = random_unitriangular(c.word().k(), rng) * sample_from_pattern(p, rng);
            Bitset zero = vanishing_flag_minors(sample, index);
            ++checked;
            if (!c.truly().is_subset_of(zero) || c.unvanishing().intersects(zero))
                v.add({{"w", c.word().to_string()}, {"seed", s}});
        }
    }
    v.finish(r, "sampled flag minors respect T_w and U_w", checked);
    return r;
}

SuiteResult suite_generic_rank(Context& ctx) {
    SuiteResult r{"generic-rank", SuiteStatus::Pass, {}};
    Violations v;
    std::size_t checked = 0;
    PrimeField field;
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const FubiniWord& w = ctx.words()[a];
        PatternMatrix p(w);
        std::mt19937_64 rng(mix_seed(ctx.seed(), a));
        PrimeFieldMatrix sample = sample_from_pattern(p, field, rng);
        std::vector<std::vector<int>> ranks(static_cast<std::size_t>(w.k()) + 1,
                                            std::vector<int>(std::size_t{1} << w.n(), 0));
        for (int h = 1; h <= w.k(); ++h) {
            std::vector<int> rows(static_cast<std::size_t>(h));
            for (int i = 1; i <= h; ++i) rows[static_cast<std::size_t>(i - 1)] = i;
            for (std::uint32_t mask = 1; mask < (1U << w.n()); ++mask) {
                PositionSet cols;
                for (int j = 0; j < w.n(); ++j)
                    if (mask >> j & 1U) cols.push_back(j + 1);
                int g = generic_rank(p, rows, cols);
                ranks[static_cast<std::size_t>(h)][mask] = g;
                ++checked;
                if (g != rank(sample.submatrix(rows, cols)))
                    v.add({{"check", "matching vs sample"}, {"w", w.to_string()}, {"h", h}, {"J", set_json(cols)}});
                if (g < ranks[static_cast<std::size_t>(h - 1)][mask])
                    v.add({{"check", "monotone in h"}, {"w", w.to_string()}, {"h", h}, {"J", set_json(cols)}});
                for (int j = 0; j < w.n(); ++j)
                    if ((mask >> j & 1U) && g < ranks[static_cast<std::size_t>(h)][mask & ~(1U << j)])
                        v.add({{"check", "monotone in J"}, {"w", w.to_string()}, {"h", h}, {"J", set_json(cols)}});
            }
        }
    }
    v.finish(r, "generic rank", checked);
    return r;
}

SuiteResult suite_medium_alpha(Context& ctx) {
    SuiteResult r{"medium-alpha", SuiteStatus::Pass, {}};
    Violations v;
    const auto& cls = ctx.classes();
    for (std::size_t a = 0; a < ctx.size(); ++a)
        for (std::size_t b = 0; b < ctx.size(); ++b) {
            bool by_bits = medium_leq(cls[a], cls[b]);
            bool by_alpha = medium_leq_alpha(ctx.words()[a], ctx.words()[b]);
            if (by_bits != by_alpha)
                v.add({{"v", ctx.words()[a].to_string()}, {"w", ctx.words()[b].to_string()}, {"bitsets", by_bits}});
        }
    v.finish(r, "medium_leq vs alpha criterion", ctx.size() * ctx.size());
    return r;
}

SuiteResult suite_touching(Context& ctx) {
    SuiteResult r{"touching", SuiteStatus::Pass, {}};
    Violations v;
    const auto& cls = ctx.classes();
    const std::size_t size = ctx.size();
    std::vector<Bitset> touch(size, Bitset(size));
    for (std::size_t a = 0; a < size; ++a) {
        if (!touches(cls[a], cls[a])) v.add({{"check", "reflexive"}, {"w", ctx.words()[a].to_string()}});
        for (std::size_t b = 0; b < size; ++b) {
            bool t = touches(cls[a], cls[b]);
            if (t) touch[a].set(b);
            bool m = medium_leq(cls[a], cls[b]);
            if (m && !t) v.add({{"check", "medium implies touching"}, {"v", ctx.words()[a].to_string()}, {"w", ctx.words()[b].to_string()}});
            if ((m || t) && !ehresmann_necessary(ctx.words()[a], ctx.words()[b]))
                v.add({{"check", "alpha prefix necessary condition"}, {"v", ctx.words()[a].to_string()}, {"w", ctx.words()[b].to_string()}});
        }
    }
    json triple = nullptr;
    for (std::size_t a = 0; a < size && triple.is_null(); ++a)
        touch[a].for_each([&](std::size_t b) {
            if (!triple.is_null() || b == a) return;
            touch[b].for_each([&](std::size_t c) {
                if (!triple.is_null() || c == b || c == a) return;
                if (!touch[a].test(c))
                    triple = {ctx.words()[a].to_string(), ctx.words()[b].to_string(), ctx.words()[c].to_string()};
            });
        });
    r.details["non_transitive_triple"] = triple;
    v.finish(r, "touching relation properties", size * size);
    return r;
}

SuiteResult suite_orders(Context& ctx) {
    if (!ctx.within_budget()) return skipped("orders", "poset size exceeds budget");
    SuiteResult r{"orders", SuiteStatus::Pass, {}};
    Violations v;
    const Poset* decaf = nullptr;
    const Poset* medium = nullptr;
    const Poset* espresso = nullptr;
    try {
        decaf = &ctx.poset(OrderKind::Decaf);
        medium = &ctx.poset(OrderKind::Medium);
        espresso = &ctx.poset(OrderKind::Espresso);
    } catch (const DomainError& e) {
        r.status = SuiteStatus::Fail;
        r.summary = std::string("poset construction failed: ") + e.what();
        return r;
    }
    if (!relation_inclusion(*decaf, *medium)) v.add({{"check", "decaf within medium"}});
    if (!relation_inclusion(*medium, *espresso)) v.add({{"check", "medium within espresso"}});
    const FubiniWord top = top_cell_word(ctx.n(), ctx.k());
    for (const Poset* p : {decaf, medium, espresso}) {
        const std::size_t size = p->elements.size();
        std::vector<int> minima;
        for (std::size_t i = 0; i < size; ++i)
            if (p->up[i].count() == size) minima.push_back(static_cast<int>(i));
        if (minima.size() != 1 || !(p->elements[static_cast<std::size_t>(minima[0])] == top))
            v.add({{"check", "unique minimum is the top cell word"}, {"order", to_string(p->kind)}});
        for (std::size_t i = 0; i < size; ++i)
            p->up[i].for_each([&](std::size_t j) {
                if (j != i && p->up[j].test(i)) v.add({{"check", "antisymmetric"}, {"order", to_string(p->kind)}});
                if (!p->up[j].is_subset_of(p->up[i])) v.add({{"check", "transitive"}, {"order", to_string(p->kind)}});
            });
        for (auto [lo, hi] : p->hasse) {
            bool implied = false;
            p->up[static_cast<std::size_t>(lo)].for_each([&](std::size_t mid) {
                if (static_cast<int>(mid) != lo && static_cast<int>(mid) != hi && p->up[mid].test(static_cast<std::size_t>(hi)))
                    implied = true;
            });
            if (implied || lo == hi || !p->leq(lo, hi)) v.add({{"check", "hasse edge is a cover"}, {"order", to_string(p->kind)}});
        }
    }
    for (std::size_t i = 0; i < medium->elements.size(); ++i)
        medium->up[i].for_each([&](std::size_t j) {
            if (j != i && !(medium->codim[i] < medium->codim[j]))
                v.add({{"check", "medium relation raises codimension"}, {"v", medium->elements[i].to_string()},
                       {"w", medium->elements[j].to_string()}});
        });
    r.details["relations"] = {{"decaf", decaf->relation_count()}, {"medium", medium->relation_count()}, {"espresso", espresso->relation_count()}};
    v.finish(r, "poset construction invariants", ctx.size());
    return r;
}

SuiteResult suite_bruhat(Context& ctx) {
    if (ctx.n() != ctx.k()) return skipped("bruhat", "applies only when k = n");
    if (!ctx.within_budget()) return skipped("bruhat", "poset size exceeds budget");
    SuiteResult r{"bruhat", SuiteStatus::Pass, {}};
    Violations v;
    std::vector<Permutation> perms;
    for (const auto& w : ctx.words()) perms.emplace_back(std::vector<int>(w.letters().begin(), w.letters().end()));
    for (OrderKind kind : {OrderKind::Medium, OrderKind::Espresso, OrderKind::Decaf}) {
        const Poset& p = ctx.poset(kind);
        for (std::size_t a = 0; a < ctx.size(); ++a)
            for (std::size_t b = 0; b < ctx.size(); ++b)
                if (p.leq(static_cast<int>(a), static_cast<int>(b)) != bruhat_leq(perms[a], perms[b]))
                    v.add({{"order", to_string(kind)}, {"v", perms[a].to_string()}, {"w", perms[b].to_string()}});
    }
    v.finish(r, "agreement with the Ehresmann criterion", 3 * ctx.size() * ctx.size());
    return r;
}

SuiteResult suite_covers(Context& ctx) {
    if (!ctx.within_budget()) return skipped("covers", "poset size exceeds budget");
    SuiteResult r{"covers", SuiteStatus::Pass, {}};
    Violations v;
    const Poset& medium = ctx.poset(OrderKind::Medium);
    std::set<std::pair<int, int>> hasse(medium.hasse.begin(), medium.hasse.end());
    std::size_t checked = 0;
    for (const auto& w : ctx.words()) {
        for (const auto& move : pushback_moves(w)) {
            ++checked;
            if (!hasse.count({medium.index_of(move.lower()), medium.index_of(move.upper())}))
                v.add({{"check", "pushback is a medium cover"}, {"w", w.to_string()}, {"v", move.target.to_string()}});
        }
        for (int i = 1; i <= w.k(); ++i)
            for (int j = i + 1; j <= w.k(); ++j) {
                ++checked;
                auto move = transposition_relation(w, i, j);
                FubiniWord t = swap_letters(w, i, j);
                bool below = medium.leq(medium.index_of(w), medium.index_of(t));
                if (below != move.has_value())
                    v.add({{"check", "w < t_ij w iff alpha_i < alpha_j"}, {"w", w.to_string()}, {"i", i}, {"j", j}});
                if (!move) continue;
                bool is_cover = hasse.count({medium.index_of(w), medium.index_of(t)}) > 0;
                if (is_cover != move->cover)
                    v.add({{"check", "transposition cover iff Bruhat cover of pi"}, {"w", w.to_string()}, {"i", i}, {"j", j}});
            }
    }
    v.finish(r, "transposition and pushback rules", checked);
    return r;
}

SuiteResult suite_decaf_ranked(Context& ctx) {
    if (!ctx.within_budget()) return skipped("decaf-ranked", "poset size exceeds budget");
    SuiteResult r{"decaf-ranked", SuiteStatus::Pass, {}};
    const Poset& decaf = ctx.poset(OrderKind::Decaf);
    RankedReport ranked = is_ranked(decaf);
    if (!ranked.ranked) {
        auto [lo, hi] = *ranked.violation;
        r.status = SuiteStatus::Fail;
        r.summary = "decaf edge " + decaf.elements[static_cast<std::size_t>(lo)].to_string() + " < " +
                    decaf.elements[static_cast<std::size_t>(hi)].to_string() + " has codimension gap " +
                    std::to_string(ranked.gap);
        return r;
    }
    IntPolynomial g = rank_generating_function(decaf);
    IntPolynomial expected = poincare_polynomial(ctx.n(), ctx.k());
    r.details = {{"rank_generating_function", g.to_string()}, {"poincare", expected.to_string()}};
    if (!(g == expected)) {
        r.status = SuiteStatus::Fail;
        r.summary = "rank generating function differs from the Poincare polynomial";
    } else {
        r.summary = "ranked; rank generating function " + g.to_string();
    }
    return r;
}

SuiteResult suite_medium_ranked(Context& ctx) {
    if (!ctx.within_budget()) return skipped("medium-ranked", "poset size exceeds budget");
    SuiteResult r{"medium-ranked", SuiteStatus::Finding, {}};
    const Poset& medium = ctx.poset(OrderKind::Medium);
    RankedReport ranked = is_ranked(medium);
    r.details["ranked"] = ranked.ranked;
    json certs = json::array();
    for (auto [lo, hi] : ranked.violations) {
        const FubiniWord& a = medium.elements[static_cast<std::size_t>(lo)];
        const FubiniWord& b = medium.elements[static_cast<std::size_t>(hi)];
        certs.push_back({{"lower", a.to_string()}, {"upper", b.to_string()}, {"dim_lower", dimension(a)},
                         {"dim_upper", dimension(b)}, {"gap", medium.codim[static_cast<std::size_t>(hi)] - medium.codim[static_cast<std::size_t>(lo)]}});
    }
    r.details["certificates"] = certs;
    if (ranked.ranked) {
        r.summary = "medium roast order is ranked by codimension";
    } else {
        const auto& first = certs.front();
        r.summary = "unranked: " + first["lower"].get<std::string>() + " covered by " + first["upper"].get<std::string>() +
                    " with codimension gap " + std::to_string(first["gap"].get<int>()) + " (" +
                    std::to_string(certs.size()) + " such covers)";
    }
    return r;
}

SuiteResult suite_membership(Context& ctx) {
    SuiteResult r{"membership", SuiteStatus::Pass, {}};
    Violations v;
    const auto& cls = ctx.classes();
    const auto& ess = ctx.ess();
    const auto& index = *ctx.index();
    std::size_t checked = 0;
    std::size_t members = 0;
    auto check_matrix = [&](const RationalMatrix& a, const std::string& label, std::optional<std::size_t> generic_of) {
        Bitset zero = vanishing_flag_minors(a, index);
        TopRankCache cache(a);
        for (std::size_t b = 0; b < ctx.size(); ++b) {
            ++checked;
            bool by_flags = member_closure_flags(zero, cls[b]);
            bool by_ess = member_closure_ess(cache, ess[b]);
            members += by_flags;
            if (by_flags != by_ess)
                v.add({{"check", "flags vs essential set"}, {"matrix", label}, {"w", ctx.words()[b].to_string()}, {"flags", by_flags}});
            if (generic_of && by_flags != medium_leq(cls[b], cls[*generic_of]))
                v.add({{"check", "generic membership vs order"}, {"matrix", label}, {"w", ctx.words()[b].to_string()}});
        }
    };
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const FubiniWord& u = ctx.words()[a];
        check_matrix(RationalMatrix::from_word(u), "M_" + u.to_string(), std::nullopt);
        PatternMatrix p(u);
        for (std::uint64_t s = 0; s < 3; ++s) {
            std::mt19937_64 rng(mix_seed(ctx.seed(), a, s));
            RationalMatrix sample = random_unitriangular(u.k(), rng) * sample_from_pattern(p, rng);
            check_matrix(sample, "sample " + std::to_string(s) + " of C_" + u.to_string(), std::nullopt);
        }
        // Generic: resample until the vanishing flag minors are exactly T_u.
        std::optional<RationalMatrix> generic;
        std::mt19937_64 rng(mix_seed(ctx.seed(), a, 1000));
        for (int attempt = 0; attempt < 100 && !generic; ++attempt) {
            RationalMatrix sample = sample_from_pattern(p, rng);
            if (vanishing_flag_minors(sample, index) == cls[a].truly()) generic = sample;
        }
        if (!generic) {
            v.add({{"check", "generic sample found within 100 attempts"}, {"u", u.to_string()}});
            continue;
        }
        check_matrix(*generic, "generic sample of C_" + u.to_string(), a);
    }
    r.details["memberships"] = members;
    v.finish(r, "closure membership", checked);
    return r;
}

SuiteResult suite_decompose(Context& ctx) {
    SuiteResult r{"decompose", SuiteStatus::Pass, {}};
    Violations v;
    std::size_t checked = 0;
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const FubiniWord& w = ctx.words()[a];
        PatternMatrix p(w);
        for (std::uint64_t s = 0; s < 3; ++s) {
            ++checked;
            std::mt19937_64 rng(mix_seed(ctx.seed(), a, s));
            RationalMatrix u0 = random_unitriangular(w.k(), rng);
            RationalMatrix a0 = sample_from_pattern(p, rng);
            RationalMatrix t0 = random_diagonal(w.n(), rng);
            try {
                Decomposition d = decompose(u0 * a0 * t0);
                if (!(d.word == w) || !(d.unitriangular == u0) || !(d.reduced == a0) || !(d.scaling == t0))
                    v.add({{"w", w.to_string()}, {"seed", s}, {"recovered", d.word.to_string()}});
            } catch (const std::exception& e) {
                v.add({{"w", w.to_string()}, {"seed", s}, {"error", e.what()}});
            }
        }
    }
    v.finish(r, "decomposition round trip", checked);
    return r;
}

SuiteResult suite_order_triangle(Context& ctx) {
    SuiteResult r{"order-triangle", SuiteStatus::Pass, {}};
    Violations v;
    const auto& cls = ctx.classes();
    const auto& ess = ctx.ess();
    for (std::size_t a = 0; a < ctx.size(); ++a)
        for (std::size_t b = 0; b < ctx.size(); ++b) {
            const FubiniWord& x = ctx.words()[a];
            const FubiniWord& y = ctx.words()[b];
            bool m = medium_leq(cls[a], cls[b]);
            bool al = medium_leq_alpha(x, y);
            bool es = medium_leq_ess(ess[a], ess[b]);
            if (m != al || m != es)
                v.add({{"v", x.to_string()}, {"w", y.to_string()}, {"bitsets", m}, {"alpha", al}, {"essential", es}});
            if (m && !ehresmann_necessary(x, y)) v.add({{"check", "necessary condition"}, {"v", x.to_string()}, {"w", y.to_string()}});
        }
    v.finish(r, "medium_leq / alpha / essential-set agreement", ctx.size() * ctx.size());
    return r;
}

SuiteResult suite_superpushback(Context& ctx) {
    if (!ctx.within_budget()) return skipped("superpushback", "poset size exceeds budget");
    SuiteResult r{"superpushback", SuiteStatus::Finding, {}};
    const Poset& medium = ctx.poset(OrderKind::Medium);
    const Poset& espresso = ctx.poset(OrderKind::Espresso);
    std::set<std::pair<int, int>> medium_covers(medium.hasse.begin(), medium.hasse.end());
    std::set<std::pair<int, int>> espresso_covers(espresso.hasse.begin(), espresso.hasse.end());
    const auto& cls = ctx.classes();
    std::size_t moves = 0;
    std::size_t not_touching = 0;
    std::size_t not_medium_cover = 0;
    std::size_t not_espresso_cover = 0;
    std::size_t not_medium_cover_redundant = 0;
    std::size_t not_espresso_cover_redundant = 0;
    std::size_t redundancy_lost = 0;
    json examples = json::array();
    for (const auto& w : ctx.words())
        for (int p = 1; p < w.k(); ++p)
            for (const auto& move : superpushback_moves(w, p)) {
                ++moves;
                int lo = ctx.index_of(move.lower());
                int hi = ctx.index_of(move.upper());
                bool touch = touches(cls[static_cast<std::size_t>(lo)], cls[static_cast<std::size_t>(hi)]);
                bool mcover = medium_covers.count({lo, hi}) > 0;
                bool ecover = espresso_covers.count({lo, hi}) > 0;
                not_touching += !touch;
                not_medium_cover += !mcover;
                not_espresso_cover += !ecover;
                redundancy_lost += !move.keeps_redundant;
                if (move.keeps_redundant) {
                    not_medium_cover_redundant += !mcover;
                    not_espresso_cover_redundant += !ecover;
                }
                if ((!touch || !mcover || !ecover) && examples.size() < kMaxExamples)
                    examples.push_back({{"w", w.to_string()}, {"v", move.target.to_string()}, {"position", move.j},
                                        {"p", p}, {"touches", touch}, {"medium_cover", mcover},
                                        {"espresso_cover", ecover}, {"keeps_redundant", move.keeps_redundant}});
            }
    r.details = {{"moves", moves},
                 {"not_touching", not_touching},
                 {"not_medium_cover", not_medium_cover},
                 {"not_espresso_cover", not_espresso_cover},
                 {"redundancy_lost", redundancy_lost},
                 {"not_medium_cover_when_redundant", not_medium_cover_redundant},
                 {"not_espresso_cover_when_redundant", not_espresso_cover_redundant},
                 {"examples", examples}};
    r.summary = std::to_string(moves) + " moves; " + std::to_string(not_touching) + " not touching, " +
                std::to_string(not_medium_cover) + " not medium covers, " + std::to_string(not_espresso_cover) +
                " not espresso covers";
    return r;
}

SuiteResult suite_lifting(Context& ctx) {
    SuiteResult r{"lifting", SuiteStatus::Finding, {}};
    const auto& cls = ctx.classes();
    std::size_t medium_pairs = 0;
    std::size_t touching_pairs = 0;
    std::size_t medium_failures = 0;
    std::size_t touching_failures = 0;
    json examples = json::array();
    for (std::size_t a = 0; a < ctx.size(); ++a)
        for (std::size_t b = 0; b < ctx.size(); ++b) {
            const FubiniWord& v = ctx.words()[a];
            const FubiniWord& w = ctx.words()[b];
            for (int i = 1; i < ctx.k(); ++i) {
                if (!(v.alpha(i + 1) < v.alpha(i)) || !(w.alpha(i + 1) < w.alpha(i))) continue;
                auto sv = static_cast<std::size_t>(ctx.index_of(swap_letters(v, i, i + 1)));
                auto sw = static_cast<std::size_t>(ctx.index_of(swap_letters(w, i, i + 1)));
                if (medium_leq(cls[a], cls[b])) {
                    ++medium_pairs;
                    if (!medium_leq(cls[sv], cls[sw])) {
                        ++medium_failures;
                        if (examples.size() < kMaxExamples)
                            examples.push_back({{"variant", "medium"}, {"v", v.to_string()}, {"w", w.to_string()}, {"i", i}});
                    }
                }
                if (touches(cls[a], cls[b])) {
                    ++touching_pairs;
                    if (!touches(cls[sv], cls[sw])) {
                        ++touching_failures;
                        if (examples.size() < kMaxExamples)
                            examples.push_back({{"variant", "touching"}, {"v", v.to_string()}, {"w", w.to_string()}, {"i", i}});
                    }
                }
            }
        }
    r.details = {{"medium_pairs", medium_pairs},
                 {"medium_failures", medium_failures},
                 {"touching_pairs", touching_pairs},
                 {"touching_failures", touching_failures},
                 {"examples", examples}};
    r.summary = "lifting: " + std::to_string(medium_pairs) + " medium pairs (" + std::to_string(medium_failures) +
                " failures), " + std::to_string(touching_pairs) + " touching pairs (" +
                std::to_string(touching_failures) + " failures)";
    return r;
}

SuiteResult suite_essential_guard(Context& ctx) {
    SuiteResult r{"essential-guard", SuiteStatus::Finding, {}};
    std::size_t cells = 0;
    std::size_t unmatched = 0;
    json examples = json::array();
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const auto& e = ctx.ess()[a];
        cells += e.triples.size() + e.unmatched.size();
        unmatched += e.unmatched.size();
        for (const auto& c : e.unmatched)
            if (examples.size() < kMaxExamples)
                examples.push_back({{"w", ctx.words()[a].to_string()}, {"cell", {c.row, c.col}}});
    }
    r.details = {{"essential_cells", cells}, {"unmatched", unmatched}, {"examples", examples}};
    r.summary = std::to_string(cells) + " essential cells, " + std::to_string(unmatched) +
                " with no matching beta column count";
    return r;
}

SuiteResult suite_ess_efficiency(Context& ctx) {
    if (ctx.n() > 4) return skipped("ess-efficiency", "witness search runs for n <= 4");
    SuiteResult r{"ess-efficiency", SuiteStatus::Finding, {}};
    const auto& cls = ctx.classes();
    std::vector<PatternMatrix> patterns;
    for (const auto& w : ctx.words()) patterns.emplace_back(w);
    std::size_t triples = 0;
    std::size_t witnessed = 0;
    json unwitnessed = json::array();
    for (std::size_t a = 0; a < ctx.size(); ++a) {
        const auto& e = ctx.ess()[a];
        for (std::size_t drop = 0; drop < e.triples.size(); ++drop) {
            ++triples;
            bool found = false;
            for (std::size_t u = 0; u < ctx.size() && !found; ++u) {
                if (medium_leq(cls[a], cls[u])) continue;
                bool satisfies = true;
                for (std::size_t t = 0; t < e.triples.size() && satisfies; ++t) {
                    if (t == drop) continue;
                    const auto& tr = e.triples[t];
                    satisfies = generic_rank_prefix(patterns[u], tr.h, tr.beta) <= tr.rank;
                }
                found = satisfies;
            }
            witnessed += found;
            if (!found && unwitnessed.size() < kMaxExamples) {
                const auto& tr = e.triples[drop];
                unwitnessed.push_back({{"w", ctx.words()[a].to_string()}, {"h", tr.h}, {"beta", set_json(tr.beta)}, {"r", tr.rank}});
            }
        }
    }
    r.details = {{"triples", triples}, {"witnessed_by_generic_cell", witnessed}, {"unwitnessed_examples", unwitnessed}};
    r.summary = std::to_string(witnessed) + " of " + std::to_string(triples) +
                " essential conditions shown necessary by a generic cell witness";
    return r;
}

using SuiteFn = SuiteResult (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"words", suite_words},
        {"pattern", suite_pattern},
        {"poincare", suite_poincare},
        {"flag-triangle", suite_flag_triangle},
        {"partition", suite_partition},
        {"rank-lemma", suite_rank_lemma},
        {"minor-lemmas", suite_minor_lemmas},
        {"sample-minors", suite_sample_minors},
        {"generic-rank", suite_generic_rank},
        {"medium-alpha", suite_medium_alpha},
        {"touching", suite_touching},
        {"orders", suite_orders},
        {"bruhat", suite_bruhat},
        {"covers", suite_covers},
        {"decaf-ranked", suite_decaf_ranked},
        {"medium-ranked", suite_medium_ranked},
        {"membership", suite_membership},
        {"decompose", suite_decompose},
        {"order-triangle", suite_order_triangle},
        {"superpushback", suite_superpushback},
        {"lifting", suite_lifting},
        {"essential-guard", suite_essential_guard},
        {"ess-efficiency", suite_ess_efficiency},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_finding_suite(const std::string& name) {
    return name == "medium-ranked" || name == "superpushback" || name == "lifting" || name == "essential-guard" ||
           name == "ess-efficiency";
}

VerifyReport verify_suite(const VerifyOptions& opts) {
    if (opts.k < 1 || opts.k > opts.n) throw DomainError("verify: need 1 <= k <= n");
    if (opts.trials < 1) throw DomainError("verify: trials must be positive");
    for (const auto& name : opts.suites)
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
            throw DomainError("verify: unknown suite '" + name + "'");
    if (fubini_count(opts.n, opts.k) > opts.budget)
        throw DomainError("verify: |W_{n,k}| = " + std::to_string(fubini_count(opts.n, opts.k)) + " exceeds budget " +
                          std::to_string(opts.budget));
    Context ctx(opts);
    VerifyReport report{opts.n, opts.k, opts.seed, opts.trials, {}};
    for (const auto& [name, fn] : registry()) {
        if (!opts.suites.empty() && std::find(opts.suites.begin(), opts.suites.end(), name) == opts.suites.end())
            continue;
        try {
            report.suites.push_back(fn(ctx));
        } catch (const InternalError& e) {
            report.suites.push_back({name, SuiteStatus::Fail, std::string("internal disagreement: ") + e.what()});
        }
    }
    return report;
}

} // namespace fubini
