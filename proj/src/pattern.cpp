#include "fubini/pattern.hpp"

#include <algorithm>

namespace fubini {

PatternMatrix::PatternMatrix(const FubiniWord& w)
    : word_(w), cells_(static_cast<std::size_t>(w.k() * w.n()), Cell::Zero) {
    const int n = w.n();
    auto set = [&](int r, int c, Cell value) { cells_[static_cast<std::size_t>((r - 1) * n + (c - 1))] = value; };
    for (int j = 1; j <= n; ++j) {
        set(w[j], j, Cell::One);
        const bool initial = w.is_initial(j);
        const int limit = w.alpha(w[j]);
        for (int i = 1; i < limit; ++i) {
            if (!w.is_initial(i)) continue;
            if (!initial || w[i] < w[j]) set(w[i], j, Cell::Star);
        }
    }
}

int PatternMatrix::star_count() const {
    return static_cast<int>(std::count(cells_.begin(), cells_.end(), Cell::Star));
}

std::string PatternMatrix::to_string() const {
    std::string out;
    for (int r = 1; r <= rows(); ++r) {
        for (int c = 1; c <= cols(); ++c) {
            if (c > 1) out += ' ';
            switch (at(r, c)) {
            case Cell::Zero: out += '0'; break;
            case Cell::One: out += '1'; break;
            case Cell::Star: out += '*'; break;
            }
        }
        out += '\n';
    }
    return out;
}

int dimension(const FubiniWord& w) { return PatternMatrix(w).star_count(); }

int cell_dimension(const FubiniWord& w) { return dimension(w) + w.k() * (w.k() - 1) / 2; }

int codimension(const FubiniWord& w) { return w.n() * (w.k() - 1) - cell_dimension(w); }

namespace {

bool augment(const PatternMatrix& p, std::span<const int> rows, std::span<const int> cols, std::size_t row_index,
             std::vector<int>& col_owner, std::vector<char>& visited) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (visited[c] || p.at(rows[row_index], cols[c]) == Cell::Zero) continue;
        visited[c] = 1;
        if (col_owner[c] < 0 ||
            augment(p, rows, cols, static_cast<std::size_t>(col_owner[c]), col_owner, visited)) {
            col_owner[c] = static_cast<int>(row_index);
            return true;
        }
    }
    return false;
}

} // namespace

int generic_rank(const PatternMatrix& p, std::span<const int> rows, std::span<const int> cols) {
    for (int r : rows)
        if (r < 1 || r > p.rows()) throw DomainError("generic_rank: row out of range");
    for (int c : cols)
        if (c < 1 || c > p.cols()) throw DomainError("generic_rank: column out of range");
    std::vector<int> col_owner(cols.size(), -1);
    std::vector<char> visited(cols.size());
    int matched = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::fill(visited.begin(), visited.end(), 0);
        if (augment(p, rows, cols, r, col_owner, visited)) ++matched;
    }
    return matched;
}

int generic_rank_prefix(const PatternMatrix& p, int h, std::span<const int> cols) {
    if (h < 0 || h > p.rows()) throw DomainError("generic_rank: h out of range");
    std::vector<int> rows(static_cast<std::size_t>(h));
    for (int r = 1; r <= h; ++r) rows[static_cast<std::size_t>(r - 1)] = r;
    return generic_rank(p, rows, cols);
}

IntPolynomial dim_polynomial(int n, int k) {
    std::vector<std::int64_t> counts;
    for_each_word(n, k, [&](const FubiniWord& w) {
        auto d = static_cast<std::size_t>(dimension(w));
        if (d >= counts.size()) counts.resize(d + 1, 0);
        ++counts[d];
    });
    return IntPolynomial(std::move(counts));
}

IntPolynomial poincare_polynomial(int n, int k) {
    std::vector<std::int64_t> counts;
    for_each_word(n, k, [&](const FubiniWord& w) {
        int c = codimension(w);
        if (c < 0) throw InternalError("negative codimension for " + w.to_string());
        auto d = static_cast<std::size_t>(c);
        if (d >= counts.size()) counts.resize(d + 1, 0);
        ++counts[d];
    });
    return IntPolynomial(std::move(counts));
}

} // namespace fubini
