#include "fubini/orders.hpp"

#include <algorithm>
#include <deque>

#include "fubini/pattern.hpp"

namespace fubini {

std::string to_string(OrderKind kind) {
    switch (kind) {
    case OrderKind::Medium: return "medium";
    case OrderKind::Espresso: return "espresso";
    case OrderKind::Decaf: return "decaf";
    }
    return "?";
}

OrderKind parse_order_kind(const std::string& text) {
    if (text == "medium") return OrderKind::Medium;
    if (text == "espresso") return OrderKind::Espresso;
    if (text == "decaf") return OrderKind::Decaf;
    throw DomainError("unknown order '" + text + "' (expected medium, espresso or decaf)");
}

int Poset::index_of(const FubiniWord& w) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), w);
    if (it == elements.end() || !(*it == w)) return -1;
    return static_cast<int>(it - elements.begin());
}

std::size_t Poset::relation_count() const {
    std::size_t c = 0;
    for (const auto& row : up) c += row.count();
    return c;
}

ClosureResult close_and_reduce(const std::vector<Bitset>& generators) {
    const std::size_t n = generators.size();
    std::vector<int> indegree(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        generators[v].for_each([&](std::size_t s) {
            if (s != v) ++indegree[s];
        });
    std::vector<std::size_t> topo;
    topo.reserve(n);
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t v = ready.front();
        ready.pop_front();
        topo.push_back(v);
        generators[v].for_each([&](std::size_t s) {
            if (s != v && --indegree[s] == 0) ready.push_back(s);
        });
    }
    if (topo.size() != n) {
        std::size_t on_cycle = 0;
        while (indegree[on_cycle] == 0) ++on_cycle;
        throw DomainError("relation has a directed cycle through element " + std::to_string(on_cycle));
    }
    std::vector<std::size_t> position(n);
    for (std::size_t t = 0; t < n; ++t) position[topo[t]] = t;

    ClosureResult out;
    out.up.assign(n, Bitset(n));
    std::vector<std::size_t> successors;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const std::size_t v = *it;
        Bitset& reach = out.up[v];
        reach.set(v);
        successors.clear();
        generators[v].for_each([&](std::size_t s) {
            if (s != v) successors.push_back(s);
        });
        std::sort(successors.begin(), successors.end(),
                  [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
        for (std::size_t s : successors) {
            if (reach.test(s)) continue;
            reach |= out.up[s];
            out.hasse.emplace_back(static_cast<int>(v), static_cast<int>(s));
        }
    }
    std::sort(out.hasse.begin(), out.hasse.end());
    return out;
}

// --------------------------------------------------------------------- moves

std::optional<CoverMove> transposition_relation(const FubiniWord& w, int i, int j) {
    if (i >= j) throw DomainError("transposition_relation: need i < j");
    if (i < 1 || j > w.k()) throw DomainError("transposition_relation: letters out of range");
    if (w.alpha(i) > w.alpha(j)) return std::nullopt;
    FubiniWord target = swap_letters(w, i, j);
    CoverMove move{MoveKind::Transposition, w, target, i, j};
    move.cover = bruhat_covers(initial_permutation(w), initial_permutation(target));
    return move;
}

namespace {

std::vector<CoverMove> replacement_moves(const FubiniWord& w, int p, MoveKind kind) {
    std::vector<CoverMove> moves;
    Permutation pi = initial_permutation(w);
    std::vector<int> rank_of(static_cast<std::size_t>(w.k()) + 1, 0);
    for (int i = 1; i <= w.k(); ++i) rank_of[static_cast<std::size_t>(pi(i))] = i;
    for (int j = 1; j <= w.n(); ++j) {
        if (w.is_initial(j)) continue;
        int i = rank_of[static_cast<std::size_t>(w[j])];
        if (i + p > w.k()) continue;
        int replacement = pi(i + p);
        CoverMove move{kind, w, replace_letter(w, j, replacement), i, j, p};
        move.keeps_redundant = w.alpha(replacement) < j;
        moves.push_back(std::move(move));
    }
    return moves;
}

} // namespace

std::vector<CoverMove> pushback_moves(const FubiniWord& w) { return replacement_moves(w, 1, MoveKind::Pushback); }

std::vector<CoverMove> superpushback_moves(const FubiniWord& w, int p) {
    if (p < 1) throw DomainError("superpushback_moves: p must be positive");
    return replacement_moves(w, p, MoveKind::Superpushback);
}

// -------------------------------------------------------------------- posets

Poset build_poset(int n, int k, OrderKind kind, BuildOptions opts) {
    if (k < 1 || k > n) throw DomainError("build_poset: need 1 <= k <= n");
    if (fubini_count(n, k) > opts.budget)
        throw DomainError("build_poset: |W_{" + std::to_string(n) + "," + std::to_string(k) + "}| = " +
                          std::to_string(fubini_count(n, k)) + " exceeds budget " + std::to_string(opts.budget));
    Poset poset;
    poset.n = n;
    poset.k = k;
    poset.kind = kind;
    poset.elements = enumerate_words(n, k);
    const std::size_t size = poset.elements.size();
    poset.codim.reserve(size);
    for (const auto& w : poset.elements) poset.codim.push_back(codimension(w));

    std::vector<Bitset> generators(size, Bitset(size));
    if (kind == OrderKind::Decaf) {
        for (std::size_t a = 0; a < size; ++a) {
            const FubiniWord& w = poset.elements[a];
            for (int i = 1; i <= k; ++i)
                for (int j = i + 1; j <= k; ++j)
                    if (auto move = transposition_relation(w, i, j); move && move->cover)
                        generators[a].set(static_cast<std::size_t>(poset.index_of(move->target)));
            for (const auto& move : pushback_moves(w))
                generators[static_cast<std::size_t>(poset.index_of(move.target))].set(a);
        }
    } else {
        auto index = std::make_shared<const ColumnSetIndex>(n, k);
        std::vector<FlagClassification> classes;
        classes.reserve(size);
        for (const auto& w : poset.elements) classes.push_back(classify_all(w, index));
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b) {
                bool related = kind == OrderKind::Medium ? medium_leq(classes[a], classes[b])
                                                         : touches(classes[a], classes[b]);
                if (related) generators[a].set(b);
            }
    }
    ClosureResult closure = close_and_reduce(generators);
    poset.up = std::move(closure.up);
    poset.hasse = std::move(closure.hasse);
    return poset;
}

// ------------------------------------------------------------------- lifting

std::string to_string(LiftingOutcome outcome) {
    switch (outcome) {
    case LiftingOutcome::Holds: return "holds";
    case LiftingOutcome::Fails: return "fails";
    case LiftingOutcome::PreconditionNotMet: return "precondition-not-met";
    }
    return "?";
}

LiftingOutcome lifting_check(const FubiniWord& v, const FubiniWord& w, int i, LiftingVariant variant) {
    if (v.n() != w.n() || v.k() != w.k()) throw DomainError("lifting_check: shape mismatch");
    if (i < 1 || i >= v.k()) throw DomainError("lifting_check: need 1 <= i < k");
    if (!(v.alpha(i + 1) < v.alpha(i)) || !(w.alpha(i + 1) < w.alpha(i))) return LiftingOutcome::PreconditionNotMet;
    auto related = [&](const FubiniWord& a, const FubiniWord& b) {
        return variant == LiftingVariant::Medium ? medium_leq(a, b) : touches(a, b);
    };
    if (!related(v, w)) return LiftingOutcome::PreconditionNotMet;
    return related(swap_letters(v, i, i + 1), swap_letters(w, i, i + 1)) ? LiftingOutcome::Holds
                                                                          : LiftingOutcome::Fails;
}

// ----------------------------------------------------------------- rankedness

RankedReport is_ranked(const Poset& p) {
    RankedReport report;
    for (auto [lo, hi] : p.hasse) {
        int gap = p.codim[static_cast<std::size_t>(hi)] - p.codim[static_cast<std::size_t>(lo)];
        if (gap == 1) continue;
        if (report.ranked) {
            report.ranked = false;
            report.violation = std::make_pair(lo, hi);
            report.gap = gap;
        }
        report.violations.emplace_back(lo, hi);
    }
    return report;
}

IntPolynomial rank_generating_function(const Poset& p) {
    if (!is_ranked(p).ranked) throw DomainError("rank_generating_function: poset is not ranked by codimension");
    IntPolynomial g;
    for (int c : p.codim) g.add_monomial(c);
    return g;
}

bool relation_inclusion(const Poset& a, const Poset& b) {
    if (a.elements != b.elements) throw DomainError("relation_inclusion: element sets differ");
    for (std::size_t i = 0; i < a.up.size(); ++i)
        if (!a.up[i].is_subset_of(b.up[i])) return false;
    return true;
}

} // namespace fubini
