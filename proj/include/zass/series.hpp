#pragma once

// Exact truncated power series and integer polynomials.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zass {

using Integer = mpz_class;
using Rational = mpq_class;

/// Default truncation order for series computations.
inline constexpr std::size_t kDefaultOrder = 32;

/// Dense polynomial with integer coefficients. The zero polynomial has no
/// stored coefficients; otherwise the leading coefficient is nonzero.
class TruncPoly {
public:
    TruncPoly() = default;
    TruncPoly(std::initializer_list<long> coeffs);
    explicit TruncPoly(std::vector<Integer> coeffs);

    static TruncPoly monomial(Integer coeff, std::size_t degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of t^i (zero past the degree).
    Integer coeff(std::size_t i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    TruncPoly operator+(const TruncPoly& other) const;
    TruncPoly operator-(const TruncPoly& other) const;
    TruncPoly operator*(const TruncPoly& other) const;
    bool operator==(const TruncPoly& other) const = default;

    TruncPoly pow(unsigned e) const;

    /// Renders as e.g. "1-2t-2t^2".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Power series known exactly in degrees 0..order.
class TruncSeries {
public:
    /// Zero series of the given order.
    explicit TruncSeries(std::size_t order);
    explicit TruncSeries(std::vector<Rational> coeffs);
    TruncSeries(std::initializer_list<Rational> coeffs);

    static TruncSeries one(std::size_t order);
    static TruncSeries from_poly(const TruncPoly& poly, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    /// Coefficient of t^i; throws OutOfRange past the stored order.
    const Rational& operator[](std::size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// True when every stored coefficient is an integer.
    bool is_integral() const;
    /// Coefficients as integers; throws Error if any is fractional.
    std::vector<Integer> integer_coeffs() const;

    TruncSeries truncated(std::size_t order) const;

    TruncSeries operator+(const TruncSeries& other) const;
    TruncSeries operator-(const TruncSeries& other) const;
    TruncSeries operator-() const;
    bool operator==(const TruncSeries& other) const = default;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// num/den with den(0) != 0, so that it expands as a power series.
class RationalFunction {
public:
    RationalFunction(TruncPoly num, TruncPoly den);

    const TruncPoly& num() const { return num_; }
    const TruncPoly& den() const { return den_; }

    RationalFunction operator*(const RationalFunction& other) const;
    bool operator==(const RationalFunction& other) const = default;

    /// Cancels the greatest common divisor and scales so den(0) = 1.
    /// Requires integer-coefficient quotients, which holds whenever
    /// num(0) and den(0) are both 1.
    RationalFunction reduced() const;

    /// Renders as "(num)/(den)", or just "(num)" when den is 1.
    std::string to_string() const;

private:
    TruncPoly num_;
    TruncPoly den_;
};

TruncSeries expand_rational(const RationalFunction& rf, std::size_t order);

/// Cauchy product truncated to the smaller of the two orders.
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse; requires a(0) != 0.
TruncSeries series_inv(const TruncSeries& a);

/// log(a) for a(0) = 1, via n*b_n = n*a_n - sum_{k<n} k*b_k*a_{n-k}.
TruncSeries series_log(const TruncSeries& a);

/// Inverse of series_log; requires a(0) = 0.
TruncSeries series_exp(const TruncSeries& a);

/// prod_{n=1}^{order} ((1 - t^{np}) / (1 - t^n))^{c_n}, truncated at order.
/// `c[0]` is c_1. Missing exponents are treated as zero.
TruncSeries product_identity_rhs(std::span<const Integer> c, unsigned p, std::size_t order);

/// Polynomial gcd over the rationals, scaled so its constant term is 1 when
/// that term is nonzero. Exposed for testing.
TruncPoly poly_gcd(const TruncPoly& a, const TruncPoly& b);

/// Exact division; throws Error when `b` does not divide `a` over the integers.
TruncPoly poly_exact_div(const TruncPoly& a, const TruncPoly& b);

std::string rational_to_string(const Rational& q);

} // namespace zass
