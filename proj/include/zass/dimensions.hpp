#pragma once

// Filtration dimensions c_n from a Hilbert-Poincare series, plus the closed
// forms used to cross-check them.
//
// With log P(t) = sum b_n t^n, define
//   w_n = (1/n) sum_{m|n} mu(n/m) m b_m,
// then for n = p^k m with gcd(m, p) = 1,
//   c_n = w_m + w_{pm} + ... + w_{p^k m}.

#include <cstddef>
#include <span>
#include <vector>

#include "zass/group_spec.hpp"
#include "zass/series.hpp"

namespace zass {

/// Per-degree data for one (group, p, N). Vectors a has N+1 entries
/// (a_0..a_N); b, w and c have N entries with index 0 holding degree 1.
struct DimensionTable {
    unsigned p = 2;
    std::size_t order = 0;
    std::vector<Integer> a;
    std::vector<Rational> b;
    std::vector<Integer> w;
    std::vector<Integer> c;

    const Rational& b_at(std::size_t n) const { return b.at(n - 1); }
    const Integer& w_at(std::size_t n) const { return w.at(n - 1); }
    const Integer& c_at(std::size_t n) const { return c.at(n - 1); }
};

int moebius(unsigned long n);

/// Positive divisors of n in increasing order.
std::vector<unsigned long> divisors(unsigned long n);

/// Throws NonIntegralW on the first non-integer w_n.
std::vector<Integer> w_sequence(std::span<const Rational> b);

/// Throws NegativeDimension on the first negative c_n.
std::vector<Integer> c_sequence(std::span<const Integer> w, unsigned p);

/// Table built from an arbitrary series with constant term 1.
DimensionTable dims_from_series(const TruncSeries& series, unsigned p);

DimensionTable dims_table(const GroupSpec& spec, unsigned p, std::size_t order);

/// Necklace count (1/n) sum_{m|n} mu(m) d^{n/m}.
Integer w_free_closed(unsigned d, unsigned n);

/// Binomial form (1/n) sum_{m|n} mu(n/m) sum_i (-1)^i m/(m-i) C(m-i, i) d^{m-2i}.
Integer w_demushkin_closed(unsigned d, unsigned n);

/// Power-sum form (1/n) sum_{m|n} mu(n/m) (a^m + b^m), a + b = d, ab = 1.
Integer w_demushkin_power_sums(unsigned d, unsigned n);

/// a_1^n + ... + a_p^n for the roots of 1 - dt - dt^2 - ... - dt^p, via the
/// multinomial sum over k_1 + 2k_2 + ... + p k_p = n.
Integer power_sums_free_product_cp(unsigned d, unsigned p, unsigned n);

/// Minimal number of generators of G_(n) for Free(d) or Demushkin(d), from
/// the index [G : G_(n)] = p^{c_1 + ... + c_{n-1}}. `c` must hold c_1..c_{n-1}.
Integer min_generators(const GroupSpec& spec, unsigned p, unsigned n, std::span<const Integer> c);

/// Closed-form c_n of a free pro-p group of rank d for 1 <= n <= 5.
Integer free_c_closed(unsigned d, unsigned p, unsigned n);

/// Closed-form c_n of a Demushkin group of rank d for 1 <= n <= 5.
Integer demushkin_c_closed(unsigned d, unsigned p, unsigned n);

/// c_n of Z_2^d semidirect C_2 (p = 2): d+1 at n = 1, d at powers of 2,
/// and 1 elsewhere.
Integer superpyth_c_closed(unsigned d, unsigned n);

/// c_1 + ... + c_{n-1}, for 1 <= n <= N+1.
Integer galois_exponent(const DimensionTable& table, std::size_t n);

} // namespace zass
