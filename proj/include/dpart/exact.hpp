#pragma once

// Exact arithmetic used by every formula in the library: arbitrary-precision
// integers and rationals (GMP), dense rational polynomials, elements of the
// cyclotomic field Q(rho_j), and the Bernoulli / unsigned Stirling numbers.

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dpart/errors.hpp"

namespace dpart {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

/// Parses "p", "-p" or "p/q"; the result is canonicalized.
BigRational parse_rational(const std::string& text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const BigRational& value);
std::string to_string(const BigInt& value);

bool is_integer(const BigRational& value);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Dense polynomial in one variable with rational coefficients; coeffs[i]
/// multiplies n^i. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs);
    RationalPolynomial(std::initializer_list<BigRational> coeffs);

    static RationalPolynomial constant(const BigRational& c);
    /// x + c
    static RationalPolynomial linear(const BigRational& slope, const BigRational& intercept);

    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    BigRational coeff(std::size_t power) const;
    BigRational leading() const;

    BigRational operator()(const BigRational& x) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const BigRational& scalar);
    friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs += rhs; }
    friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) { return lhs -= rhs; }
    friend RationalPolynomial operator*(RationalPolynomial lhs, const BigRational& s) { return lhs *= s; }
    friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend bool operator==(const RationalPolynomial& lhs, const RationalPolynomial& rhs) = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

/// Lagrange interpolation through (x_i, y_i); the x_i must be distinct.
RationalPolynomial interpolate(std::span<const std::pair<BigRational, BigRational>> points);

/// Coefficients of the j-th cyclotomic polynomial Phi_j, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned j);

/// Euler's totient, by trial division.
unsigned euler_phi(unsigned j);

/// sum_{l=0}^{j-1} coeffs[l] * rho_j^l with rho_j = exp(2 pi i / j).
///
/// Arithmetic happens in Q[x]/(x^j - 1), where products are cyclic
/// convolutions. Equality and rational extraction first reduce modulo Phi_j,
/// the kernel of the evaluation x -> rho_j. Values of different orders are
/// combined by lifting both to the lcm of the orders.
class CyclotomicNumber {
public:
    /// Zero of order 1.
    CyclotomicNumber();
    /// The rational r embedded at the given order.
    CyclotomicNumber(unsigned order, const BigRational& r);
    CyclotomicNumber(unsigned order, std::vector<BigRational> coeffs);

    unsigned order() const noexcept { return order_; }
    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

    /// Same value expressed at order m, a multiple of order().
    CyclotomicNumber lifted(unsigned m) const;

    /// Remainder modulo Phi_order, trimmed of trailing zeros; this is the
    /// unique representative used for comparisons.
    std::vector<BigRational> canonical() const;
    bool is_rational() const;
    bool is_zero() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& other);
    CyclotomicNumber& operator-=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const CyclotomicNumber& other);
    CyclotomicNumber& operator*=(const BigRational& scalar);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const BigRational& s) { return a *= s; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    CyclotomicNumber pow(unsigned long e) const;

private:
    unsigned order_;
    std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

/// rho_j^e, exponent reduced mod j.
CyclotomicNumber root_of_unity(unsigned j, long long e);

/// Index-0 coefficient of the canonical form. Throws NotRational if any
/// higher coefficient survives reduction.
BigRational to_rational(const CyclotomicNumber& x);

/// Calls visit(i) for every composition i_1 + ... + i_parts = total with
/// non-negative entries, in lexicographic order.
void for_each_composition(unsigned total, std::size_t parts,
                          const std::function<void(const std::vector<unsigned>&)>& visit);

/// B_m with the t/(e^t - 1) convention (B_1 = -1/2). Memoized.
BigRational bernoulli(unsigned m);

/// Coefficient of n^{k-1} in (n+1)(n+2)...(n+r-1). Requires 1 <= k <= r.
BigInt stirling_unsigned(unsigned r, unsigned k);

} // namespace dpart
