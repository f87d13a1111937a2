#ifndef FUBINI_ORDERS_HPP
#define FUBINI_ORDERS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fubini/column_sets.hpp"
#include "fubini/flag_minors.hpp"
#include "fubini/polynomial.hpp"

namespace fubini {

enum class OrderKind { Medium, Espresso, Decaf };

std::string to_string(OrderKind kind);
OrderKind parse_order_kind(const std::string& text);

/// A partial order on W_{n,k}. Elements are in lexicographic order; up[i]
/// holds every j with elements[i] <= elements[j] (reflexive).
struct Poset {
    int n = 0;
    int k = 0;
    OrderKind kind = OrderKind::Medium;
    std::vector<FubiniWord> elements;
    std::vector<Bitset> up;
    /// Covers (lower, upper), sorted.
    std::vector<std::pair<int, int>> hasse;
    std::vector<int> codim;

    [[nodiscard]] int size() const { return static_cast<int>(elements.size()); }
    [[nodiscard]] bool leq(int i, int j) const { return up[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)); }
    /// -1 when the word is not an element.
    [[nodiscard]] int index_of(const FubiniWord& w) const;
    [[nodiscard]] std::size_t relation_count() const;
};

/// Generic closure: given generator edges v -> s (as rows), computes the
/// reflexive-transitive closure and its Hasse diagram. Throws DomainError
/// naming a vertex on a directed cycle when the generators are cyclic.
struct ClosureResult {
    std::vector<Bitset> up;
    std::vector<std::pair<int, int>> hasse;
};
ClosureResult close_and_reduce(const std::vector<Bitset>& generators);

struct BuildOptions {
    std::size_t budget = 20000;
};

Poset build_poset(int n, int k, OrderKind kind, BuildOptions opts = {});

enum class MoveKind { Transposition, Pushback, Superpushback };

/// A generated relation between two words. For transpositions the target
/// lies above the source; for (super)pushbacks the target lies below.
struct CoverMove {
    MoveKind kind;
    FubiniWord source;
    FubiniWord target;
    int i = 0;        ///< transposition letters (i, j) or pushback rank i
    int j = 0;        ///< transposition letter j or changed position
    int step = 0;     ///< superpushback step p
    bool cover = false; ///< transposition: pi(t_ij w) covers pi(w) in Bruhat order
    /// (super)pushback: the replacement letter already occurs before the position.
    bool keeps_redundant = true;

    [[nodiscard]] const FubiniWord& lower() const { return kind == MoveKind::Transposition ? source : target; }
    [[nodiscard]] const FubiniWord& upper() const { return kind == MoveKind::Transposition ? target : source; }
};

/// The move w -> t_ij w when alpha_i(w) < alpha_j(w).
std::optional<CoverMove> transposition_relation(const FubiniWord& w, int i, int j);
/// Every move replacing a redundant letter pi_i (i < k) by pi_{i+1}.
std::vector<CoverMove> pushback_moves(const FubiniWord& w);
/// Every move replacing a redundant letter pi_i by pi_{i+p}, i + p <= k.
std::vector<CoverMove> superpushback_moves(const FubiniWord& w, int p);

enum class LiftingVariant { Medium, Touching };
enum class LiftingOutcome { Holds, Fails, PreconditionNotMet };
std::string to_string(LiftingOutcome outcome);

/// With alpha_{i+1} < alpha_i in both words and v <= w (or v touches w),
/// checks s_i v <= s_i w (or s_i v touches s_i w).
LiftingOutcome lifting_check(const FubiniWord& v, const FubiniWord& w, int i, LiftingVariant variant);

struct RankedReport {
    bool ranked = true;
    /// First Hasse edge (lower, upper) whose codimension gap differs from 1.
    std::optional<std::pair<int, int>> violation;
    int gap = 1;
    /// Every such edge.
    std::vector<std::pair<int, int>> violations;
};
RankedReport is_ranked(const Poset& p);
/// Sum of q^{codim}; requires a ranked poset.
IntPolynomial rank_generating_function(const Poset& p);
/// Every relation of a is a relation of b.
bool relation_inclusion(const Poset& a, const Poset& b);

} // namespace fubini

#endif
