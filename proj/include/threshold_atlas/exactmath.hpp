#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace threshold_atlas {

using Integer = mpz_class;

/// Dense polynomial in one variable t with exact integer coefficients.
///
/// Coefficient i is the coefficient of t^i. The stored sequence never has a
/// trailing zero, so the zero polynomial is the empty sequence and
/// degree() == coeffs().size() - 1 for everything else.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Integer> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    static Polynomial constant(const Integer& c);
    /// t + c
    static Polynomial linear(const Integer& c);

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of t^i; zero past the degree.
    Integer coeff(std::size_t i) const;
    Integer leading() const;

    Integer operator()(const Integer& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Integer& c);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Integer& c) { return lhs *= c; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

    /// Descending powers, e.g. "t^4-6t^3+15t^2-17t+7"; "0" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

// Integer sequences. Values are memoized process-wide in triangular tables
// that are safe to read and extend from several threads at once.

/// Stirling numbers of the second kind S(n,k).
Integer stirling2(std::size_t n, std::size_t k);
/// Unsigned Stirling numbers of the first kind c(n,k).
Integer stirling1_unsigned(std::size_t n, std::size_t k);
/// Eulerian numbers A(n,k): permutations of [n] with k descents. Needs n >= 1.
Integer eulerian(std::size_t n, std::size_t k);
/// Ordered Bell (Fubini) numbers, sum_k k! S(n,k).
Integer ordered_bell(std::size_t n);
/// Coefficient of t^j in (t+1)(t+3)...(t+(2n-1)), via
/// a(n,j) = (2n-1) a(n-1,j) + a(n-1,j-1).
Integer a_coeff(std::size_t n, std::size_t j);

Integer binomial(std::size_t n, std::size_t k);
Integer factorial(std::size_t n);
Integer power_of_two(std::size_t e);

/// (t+1)(t+3)...(t+(2k-1))
Polynomial rising_odd_product(std::size_t k);
/// (t-1)(t-3)...(t-(2k-1))
Polynomial falling_odd_product(std::size_t k);

Integer poly_eval(const Polynomial& p, const Integer& x);

/// Unique polynomial of degree < points.size() through the points. Works in
/// exact rationals and throws IntegralityError if a coefficient of the
/// interpolant is not an integer; DomainError on repeated x.
Polynomial lagrange_interpolate(const std::vector<std::pair<Integer, Integer>>& points);

}  // namespace threshold_atlas
