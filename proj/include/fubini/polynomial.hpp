#ifndef FUBINI_POLYNOMIAL_HPP
#define FUBINI_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fubini {

/// Polynomial in q with nonnegative integer coefficients; coefficient i is
/// the coefficient of q^i. Trailing zeros are trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients);
    static IntPolynomial monomial(int degree, std::int64_t coefficient = 1);

    [[nodiscard]] const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::int64_t operator[](int i) const;
    /// Value at q = 1.
    [[nodiscard]] std::int64_t sum() const;
    /// "1 + 3q + 2q^2"
    [[nodiscard]] std::string to_string() const;

    void add_monomial(int degree, std::int64_t coefficient = 1);

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// [m]_q = 1 + q + ... + q^{m-1}
IntPolynomial q_integer(int m);
/// [k]!_q
IntPolynomial q_factorial(int k);
/// Stir_q(n,k) = Stir_q(n-1,k-1) + [k]_q Stir_q(n-1,k), Stir_q(n,1) = Stir_q(n,n) = 1.
IntPolynomial q_stirling(int n, int k);
/// Coefficient sequence reversed (relative to the degree).
IntPolynomial reverse(const IntPolynomial& p);

} // namespace fubini

#endif
