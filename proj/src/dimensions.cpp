#include "zass/dimensions.hpp"

#include <string>

#include "zass/error.hpp"

namespace zass {

int moebius(unsigned long n)
{
    if (n == 0)
        throw OutOfRange("moebius is defined for n >= 1");
    int sign = 1;
    for (unsigned long f = 2; f * f <= n; ++f) {
        if (n % f != 0)
            continue;
        n /= f;
        if (n % f == 0)
            return 0;
        sign = -sign;
    }
    if (n > 1)
        sign = -sign;
    return sign;
}

std::vector<unsigned long> divisors(unsigned long n)
{
    std::vector<unsigned long> small, large;
    for (unsigned long f = 1; f * f <= n; ++f) {
        if (n % f != 0)
            continue;
        small.push_back(f);
        if (f != n / f)
            large.push_back(n / f);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Integer> w_sequence(std::span<const Rational> b)
{
    std::vector<Integer> w;
    w.reserve(b.size());
    for (unsigned long n = 1; n <= b.size(); ++n) {
        Rational sum = 0;
        for (unsigned long m : divisors(n)) {
            const int mu = moebius(n / m);
            if (mu != 0)
                sum += Rational(mu * static_cast<long>(m)) * b[m - 1];
        }
        sum /= Rational(n);
        sum.canonicalize();
        if (sum.get_den() != 1)
            throw NonIntegralW(n);
        w.push_back(sum.get_num());
    }
    return w;
}

std::vector<Integer> c_sequence(std::span<const Integer> w, unsigned p)
{
    std::vector<Integer> c;
    c.reserve(w.size());
    for (unsigned long n = 1; n <= w.size(); ++n) {
        unsigned long m = n;
        while (m % p == 0)
            m /= p;
        Integer sum = 0;
        for (unsigned long q = m; q <= n; q *= p)
            sum += w[q - 1];
        if (sum < 0)
            throw NegativeDimension(n);
        c.push_back(sum);
    }
    return c;
}

DimensionTable dims_from_series(const TruncSeries& series, unsigned p)
{
    DimensionTable t;
    t.p = p;
    t.order = series.order();
    t.a = series.integer_coeffs();
    const TruncSeries log = series_log(series);
    t.b.assign(log.coeffs().begin() + 1, log.coeffs().end());
    for (std::size_t n = 1; n <= t.b.size(); ++n) {
        Rational nb = t.b[n - 1] * Rational(static_cast<unsigned long>(n));
        nb.canonicalize();
        if (nb.get_den() != 1)
            throw IntegralityError("n*b_n is not an integer at n = " + std::to_string(n), n);
    }
    t.w = w_sequence(t.b);
    t.c = c_sequence(t.w, p);
    return t;
}

DimensionTable dims_table(const GroupSpec& spec, unsigned p, std::size_t order)
{
    return dims_from_series(hp_series(spec, p, order), p);
}

Integer w_free_closed(unsigned d, unsigned n)
{
    Integer sum = 0;
    for (unsigned long m : divisors(n)) {
        const int mu = moebius(m);
        if (mu == 0)
            continue;
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), d, n / m);
        sum += mu * term;
    }
    return sum / n;
}

namespace {

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// sum_{0<=i<=m/2} (-1)^i m/(m-i) C(m-i, i) d^{m-2i}
Rational demushkin_inner(unsigned d, unsigned long m)
{
    Rational s = 0;
    for (unsigned long i = 0; 2 * i <= m; ++i) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), d, m - 2 * i);
        Rational term = Rational(binomial(m - i, i) * pw) * Rational(m) / Rational(m - i);
        if (i % 2)
            s -= term;
        else
            s += term;
    }
    return s;
}

Integer mobius_average(unsigned n, auto&& f)
{
    Rational sum = 0;
    for (unsigned long m : divisors(n)) {
        const int mu = moebius(n / m);
        if (mu != 0)
            sum += Rational(mu) * f(m);
    }
    sum /= Rational(n);
    sum.canonicalize();
    if (sum.get_den() != 1)
        throw NonIntegralW(n);
    return sum.get_num();
}

} // namespace

Integer w_demushkin_closed(unsigned d, unsigned n)
{
    return mobius_average(n, [d](unsigned long m) { return demushkin_inner(d, m); });
}

Integer w_demushkin_power_sums(unsigned d, unsigned n)
{
    // s_m = a^m + b^m satisfies s_m = d s_{m-1} - s_{m-2}, s_0 = 2, s_1 = d.
    std::vector<Integer> s(n + 1);
    s[0] = 2;
    if (n >= 1)
        s[1] = d;
    for (unsigned m = 2; m <= n; ++m)
        s[m] = d * s[m - 1] - s[m - 2];
    return mobius_average(n, [&](unsigned long m) { return Rational(s[m]); });
}

namespace {

// Enumerates k_j >= 0 for j = idx..p with sum_j j*k_j = remaining.
void multinomial_terms(unsigned p, unsigned idx, unsigned remaining, std::vector<unsigned>& k,
                       unsigned n, unsigned d, Rational& total)
{
    if (idx > p) {
        if (remaining != 0)
            return;
        unsigned long parts = 0;
        for (unsigned kj : k)
            parts += kj;
        // multinomial(parts; k_1..k_p)
        Integer multi = 1;
        unsigned long placed = 0;
        for (unsigned kj : k) {
            placed += kj;
            multi *= binomial(placed, kj);
        }
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), d, parts);
        total += Rational(multi * pw) * Rational(static_cast<unsigned long>(n)) / Rational(parts);
        return;
    }
    for (unsigned kj = 0; kj * idx <= remaining; ++kj) {
        k[idx - 1] = kj;
        multinomial_terms(p, idx + 1, remaining - kj * idx, k, n, d, total);
    }
    k[idx - 1] = 0;
}

} // namespace

Integer power_sums_free_product_cp(unsigned d, unsigned p, unsigned n)
{
    if (n == 0)
        throw OutOfRange("power sums are indexed from n = 1");
    if (d == 0)
        return 0;
    std::vector<unsigned> k(p, 0);
    Rational total = 0;
    multinomial_terms(p, 1, n, k, n, d, total);
    total.canonicalize();
    if (total.get_den() != 1)
        throw Error("power sum is not an integer");
    return total.get_num();
}

Integer min_generators(const GroupSpec& spec, unsigned p, unsigned n, std::span<const Integer> c)
{
    if (n == 0)
        throw OutOfRange("min_generators is defined for n >= 1");
    if (c.size() + 1 < n)
        throw OutOfRange("need c_1..c_" + std::to_string(n - 1));
    Integer exponent = 0;
    for (unsigned i = 0; i + 1 < n; ++i)
        exponent += c[i];
    if (!exponent.fits_ulong_p())
        throw OutOfRange("index exponent too large");
    Integer index;
    mpz_ui_pow_ui(index.get_mpz_t(), p, exponent.get_ui());
    if (const auto* f = spec.as<Free>()) {
        if (f->rank < 1)
            throw UnsupportedSpec("min_generators needs a free group of rank >= 1");
        return index * (f->rank - 1) + 1;
    }
    if (const auto* dm = spec.as<Demushkin>()) {
        if (dm->rank < 2)
            throw UnsupportedSpec("min_generators needs a Demushkin group of rank >= 2");
        return index * (dm->rank - 2) + 2;
    }
    throw UnsupportedSpec("min_generators supports only free(d) and demushkin(d), got " + spec.to_string());
}

Integer galois_exponent(const DimensionTable& table, std::size_t n)
{
    if (n < 1 || n > table.c.size() + 1)
        throw OutOfRange("galois_exponent needs 1 <= n <= " + std::to_string(table.c.size() + 1));
    Integer sum = 0;
    for (std::size_t i = 1; i < n; ++i)
        sum += table.c[i - 1];
    return sum;
}

} // namespace zass

namespace zass {

namespace {

Integer ipow(unsigned d, unsigned e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), d, e);
    return r;
}

Integer exact_div(const Integer& num, unsigned den)
{
    if (num % den != 0)
        throw Error("closed form is not integral");
    return num / den;
}

} // namespace

Integer free_c_closed(unsigned d, unsigned p, unsigned n)
{
    const Integer D = d;
    switch (n) {
    case 1:
        return D;
    case 2:
        return p == 2 ? exact_div(ipow(d, 2) + D, 2) : exact_div(ipow(d, 2) - D, 2);
    case 3:
        return p == 3 ? exact_div(ipow(d, 3) + 2 * D, 3) : exact_div(ipow(d, 3) - D, 3);
    case 4:
        return p == 2 ? exact_div(ipow(d, 4) + ipow(d, 2) + 2 * D, 4) : exact_div(ipow(d, 4) - ipow(d, 2), 4);
    case 5:
        return p == 5 ? exact_div(ipow(d, 5) + 4 * D, 5) : exact_div(ipow(d, 5) - D, 5);
    default:
        throw OutOfRange("free closed forms cover 1 <= n <= 5");
    }
}

Integer demushkin_c_closed(unsigned d, unsigned p, unsigned n)
{
    const Integer D = d;
    switch (n) {
    case 1:
        return D;
    case 2:
        return p == 2 ? exact_div(ipow(d, 2) + D - 2, 2) : exact_div(ipow(d, 2) - D - 2, 2);
    case 3:
        return p == 3 ? exact_div(ipow(d, 3) - D, 3) : exact_div(ipow(d, 3) - 4 * D, 3);
    case 4:
        return p == 2 ? exact_div(ipow(d, 4) - 3 * ipow(d, 2) + 2 * D, 4)
                      : exact_div(ipow(d, 4) - 5 * ipow(d, 2) + 4, 4);
    case 5:
        return p == 5 ? exact_div(ipow(d, 5) - 5 * ipow(d, 3) + 9 * D, 5)
                      : exact_div(ipow(d, 5) - 5 * ipow(d, 3) + 4 * D, 5);
    default:
        throw OutOfRange("Demushkin closed forms cover 1 <= n <= 5");
    }
}

Integer superpyth_c_closed(unsigned d, unsigned n)
{
    if (n == 0)
        throw OutOfRange("n must be at least 1");
    if (n == 1)
        return d + 1;
    if ((n & (n - 1)) == 0)
        return d;
    return 1;
}

} // namespace zass
