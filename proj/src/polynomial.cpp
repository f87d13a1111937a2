#include "fubini/polynomial.hpp"

#include <algorithm>

#include "fubini/error.hpp"

namespace fubini {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t coefficient) {
    IntPolynomial p;
    p.add_monomial(degree, coefficient);
    return p;
}

std::int64_t IntPolynomial::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

std::int64_t IntPolynomial::sum() const {
    std::int64_t s = 0;
    for (auto c : coeffs_) s += c;
    return s;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        auto c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c != 1) out += std::to_string(c);
        if (i >= 1) out += 'q';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

void IntPolynomial::add_monomial(int degree, std::int64_t coefficient) {
    if (degree < 0) throw DomainError("polynomial: negative degree");
    if (static_cast<std::size_t>(degree) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(degree) + 1, 0);
    coeffs_[static_cast<std::size_t>(degree)] += coefficient;
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial q_integer(int m) {
    if (m < 0) throw DomainError("q_integer: negative argument");
    return IntPolynomial(std::vector<std::int64_t>(static_cast<std::size_t>(m), 1));
}

IntPolynomial q_factorial(int k) {
    if (k < 0) throw DomainError("q_factorial: negative argument");
    IntPolynomial p = IntPolynomial::monomial(0);
    for (int i = 2; i <= k; ++i) p = p * q_integer(i);
    return p;
}

IntPolynomial q_stirling(int n, int k) {
    if (k < 1 || k > n) throw DomainError("q_stirling: need 1 <= k <= n");
    // table[m][j] for m <= n, j <= k
    std::vector<std::vector<IntPolynomial>> table(static_cast<std::size_t>(n) + 1,
                                                  std::vector<IntPolynomial>(static_cast<std::size_t>(k) + 1));
    for (int m = 1; m <= n; ++m) {
        for (int j = 1; j <= std::min(m, k); ++j) {
            if (j == 1 || j == m) {
                table[m][j] = IntPolynomial::monomial(0);
                continue;
            }
            table[m][j] = table[m - 1][j - 1] + q_integer(j) * table[m - 1][j];
        }
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

IntPolynomial reverse(const IntPolynomial& p) {
    auto c = p.coefficients();
    std::reverse(c.begin(), c.end());
    return IntPolynomial(std::move(c));
}

} // namespace fubini
