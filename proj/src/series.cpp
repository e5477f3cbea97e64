#include "zass/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "zass/error.hpp"

namespace zass {

// ---- TruncPoly -------------------------------------------------------------

TruncPoly::TruncPoly(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

TruncPoly::TruncPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

TruncPoly TruncPoly::monomial(Integer coeff, std::size_t degree)
{
    std::vector<Integer> c(degree + 1);
    c[degree] = std::move(coeff);
    return TruncPoly(std::move(c));
}

void TruncPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Integer TruncPoly::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

TruncPoly TruncPoly::operator+(const TruncPoly& other) const
{
    std::vector<Integer> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(i) + other.coeff(i);
    return TruncPoly(std::move(c));
}

TruncPoly TruncPoly::operator-(const TruncPoly& other) const
{
    std::vector<Integer> c(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = coeff(i) - other.coeff(i);
    return TruncPoly(std::move(c));
}

TruncPoly TruncPoly::operator*(const TruncPoly& other) const
{
    if (is_zero() || other.is_zero())
        return {};
    std::vector<Integer> c(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return TruncPoly(std::move(c));
}

TruncPoly TruncPoly::pow(unsigned e) const
{
    TruncPoly result{1};
    for (unsigned i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

namespace {

template <typename Coeff>
std::string render_terms(const std::vector<Coeff>& coeffs, const auto& to_str)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Coeff& c = coeffs[i];
        if (c == 0)
            continue;
        Coeff mag = abs(c);
        if (c < 0)
            os << '-';
        else if (!first)
            os << '+';
        if (i == 0 || mag != 1)
            os << to_str(mag);
        if (i >= 1)
            os << 't';
        if (i >= 2)
            os << '^' << i;
        first = false;
    }
    if (first)
        os << '0';
    return os.str();
}

} // namespace

std::string TruncPoly::to_string() const
{
    return render_terms(coeffs_, [](const Integer& z) { return z.get_str(); });
}

// ---- TruncSeries -----------------------------------------------------------

TruncSeries::TruncSeries(std::size_t order) : coeffs_(order + 1) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw Error("a truncated series needs at least one coefficient");
}

TruncSeries::TruncSeries(std::initializer_list<Rational> coeffs)
    : TruncSeries(std::vector<Rational>(coeffs))
{
}

TruncSeries TruncSeries::one(std::size_t order)
{
    TruncSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncSeries TruncSeries::from_poly(const TruncPoly& poly, std::size_t order)
{
    TruncSeries s(order);
    for (std::size_t i = 0; i <= order; ++i)
        s.coeffs_[i] = poly.coeff(i);
    return s;
}

const Rational& TruncSeries::operator[](std::size_t i) const
{
    if (i >= coeffs_.size())
        throw OutOfRange("coefficient t^" + std::to_string(i) + " requested from a series of order " +
                         std::to_string(order()));
    return coeffs_[i];
}

bool TruncSeries::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
}

std::vector<Integer> TruncSeries::integer_coeffs() const
{
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1)
            throw Error("coefficient t^" + std::to_string(i) + " is not an integer");
        out.push_back(coeffs_[i].get_num());
    }
    return out;
}

TruncSeries TruncSeries::truncated(std::size_t order) const
{
    if (order > this->order())
        throw OutOfRange("cannot extend a series of order " + std::to_string(this->order()) +
                         " to order " + std::to_string(order));
    return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries TruncSeries::operator+(const TruncSeries& other) const
{
    TruncSeries out(std::min(order(), other.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& other) const
{
    TruncSeries out(std::min(order(), other.order()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
    return out;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = -coeffs_[i];
    return out;
}

std::string TruncSeries::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            os << ", ";
        os << rational_to_string(coeffs_[i]);
    }
    os << ']';
    return os.str();
}

std::string rational_to_string(const Rational& q)
{
    Rational r = q;
    r.canonicalize();
    return r.get_str();
}

// ---- RationalFunction ------------------------------------------------------

RationalFunction::RationalFunction(TruncPoly num, TruncPoly den)
    : num_(std::move(num)), den_(std::move(den))
{
    if (den_.coeff(0) == 0)
        throw ZeroConstantDenominator();
}

RationalFunction RationalFunction::operator*(const RationalFunction& other) const
{
    return RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction RationalFunction::reduced() const
{
    if (num_.is_zero())
        return RationalFunction(TruncPoly{}, TruncPoly{1});
    TruncPoly g = poly_gcd(num_, den_);
    TruncPoly num = poly_exact_div(num_, g);
    TruncPoly den = poly_exact_div(den_, g);
    if (den.coeff(0) < 0) {
        num = TruncPoly{} - num;
        den = TruncPoly{} - den;
    }
    return RationalFunction(std::move(num), std::move(den));
}

std::string RationalFunction::to_string() const
{
    if (den_ == TruncPoly{1})
        return "(" + num_.to_string() + ")";
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---- polynomial gcd --------------------------------------------------------

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly to_q(const TruncPoly& p)
{
    QPoly q(p.coeffs().begin(), p.coeffs().end());
    return q;
}

// Remainder of a modulo b over Q; b nonzero.
QPoly q_rem(QPoly a, const QPoly& b)
{
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

} // namespace

TruncPoly poly_gcd(const TruncPoly& a, const TruncPoly& b)
{
    QPoly x = to_q(a), y = to_q(b);
    while (!y.empty()) {
        QPoly r = q_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty())
        return {};
    // Clear denominators and content to get a primitive integer polynomial.
    Integer lcm_den = 1;
    for (const Rational& c : x)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    z.reserve(x.size());
    Integer content = 0;
    for (const Rational& c : x) {
        Rational scaled = c * lcm_den;
        z.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.back().get_mpz_t());
    }
    const Integer& lead = z.front() != 0 ? z.front() : z.back();
    if (lead < 0)
        content = -content;
    for (Integer& c : z)
        c /= content;
    return TruncPoly(std::move(z));
}

TruncPoly poly_exact_div(const TruncPoly& a, const TruncPoly& b)
{
    if (b.is_zero())
        throw Error("polynomial division by zero");
    if (a.degree() < b.degree()) {
        if (a.is_zero())
            return {};
        throw Error("polynomial " + b.to_string() + " does not divide " + a.to_string());
    }
    std::vector<Integer> rem = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Integer> quot(rem.size() - bc.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Integer& top = rem[k + bc.size() - 1];
        if (top % bc.back() != 0)
            throw Error("polynomial " + b.to_string() + " does not divide " + a.to_string());
        quot[k] = top / bc.back();
        for (std::size_t i = 0; i < bc.size(); ++i)
            rem[k + i] -= quot[k] * bc[i];
    }
    for (const Integer& r : rem)
        if (r != 0)
            throw Error("polynomial " + b.to_string() + " does not divide " + a.to_string());
    return TruncPoly(std::move(quot));
}

// ---- series operations -----------------------------------------------------

TruncSeries expand_rational(const RationalFunction& rf, std::size_t order)
{
    const TruncPoly& den = rf.den();
    const Integer den0 = den.coeff(0);
    if (den0 == 0)
        throw ZeroConstantDenominator();
    std::vector<Rational> c(order + 1);
    const std::size_t dd = static_cast<std::size_t>(std::max(den.degree(), 0L));
    for (std::size_t n = 0; n <= order; ++n) {
        Rational v = rf.num().coeff(n);
        for (std::size_t k = 1; k <= std::min(n, dd); ++k)
            v -= Rational(den.coeffs()[k]) * c[n - k];
        c[n] = v / Rational(den0);
    }
    return TruncSeries(std::move(c));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            c[i + j] += a[i] * b[j];
    }
    return TruncSeries(std::move(c));
}

TruncSeries series_inv(const TruncSeries& a)
{
    if (a[0] == 0)
        throw NotInvertible();
    const std::size_t order = a.order();
    std::vector<Rational> c(order + 1);
    const Rational inv0 = 1 / a[0];
    c[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational v = 0;
        for (std::size_t k = 1; k <= n; ++k)
            v += a[k] * c[n - k];
        c[n] = -v * inv0;
    }
    return TruncSeries(std::move(c));
}

TruncSeries series_log(const TruncSeries& a)
{
    if (a[0] != 1)
        throw ConstantTermNotOne();
    const std::size_t order = a.order();
    std::vector<Rational> b(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational s = Rational(static_cast<unsigned long>(n)) * a[n];
        for (std::size_t k = 1; k < n; ++k)
            s -= Rational(static_cast<unsigned long>(k)) * b[k] * a[n - k];
        b[n] = s / Rational(static_cast<unsigned long>(n));
    }
    return TruncSeries(std::move(b));
}

TruncSeries series_exp(const TruncSeries& b)
{
    if (b[0] != 0)
        throw Error("exponential requires constant term 0");
    const std::size_t order = b.order();
    std::vector<Rational> a(order + 1);
    a[0] = 1;
    // n*a_n = sum_{k=1}^{n} k*b_k*a_{n-k}
    for (std::size_t n = 1; n <= order; ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n; ++k)
            s += Rational(static_cast<unsigned long>(k)) * b[k] * a[n - k];
        a[n] = s / Rational(static_cast<unsigned long>(n));
    }
    return TruncSeries(std::move(a));
}

namespace {

// acc *= f, both integer series of the same length.
void mul_into(std::vector<Integer>& acc, const std::vector<Integer>& f)
{
    std::vector<Integer> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < acc.size(); ++j)
            if (f[j] != 0)
                out[i + j] += acc[i] * f[j];
    }
    acc = std::move(out);
}

Integer binomial(const Integer& top, unsigned long k)
{
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
    return r;
}

} // namespace

TruncSeries product_identity_rhs(std::span<const Integer> c, unsigned p, std::size_t order)
{
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] < 0)
            throw NegativeExponent(i + 1);
    std::vector<Integer> acc(order + 1);
    acc[0] = 1;
    for (std::size_t n = 1; n <= std::min(order, c.size()); ++n) {
        const Integer& e = c[n - 1];
        if (e == 0)
            continue;
        // (1 - t^n)^{-e} = sum_k C(e+k-1, k) t^{nk}
        std::vector<Integer> geo(order + 1);
        for (std::size_t k = 0; n * k <= order; ++k)
            geo[n * k] = binomial(e + static_cast<unsigned long>(k) - 1, k);
        // (1 - t^{np})^{e} = sum_k (-1)^k C(e, k) t^{npk}
        std::vector<Integer> num(order + 1);
        const std::size_t step = n * p;
        for (std::size_t k = 0; step * k <= order; ++k) {
            Integer b = binomial(e, k);
            num[step * k] = (k % 2 == 0) ? b : Integer(-b);
        }
        mul_into(acc, geo);
        mul_into(acc, num);
    }
    std::vector<Rational> out(acc.begin(), acc.end());
    return TruncSeries(std::move(out));
}

} // namespace zass
