#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zass/dimensions.hpp"
#include "zass/error.hpp"
#include "zass/group_spec.hpp"

using namespace zass;

namespace {

std::vector<Integer> c_of(const std::string& text, unsigned p, std::size_t n)
{
    return dims_table(parse_group_spec(text), p, n).c;
}

std::vector<Integer> zs(std::initializer_list<long> xs)
{
    return std::vector<Integer>(xs.begin(), xs.end());
}

// Necklace count by brute force: primitive words of length n over d letters
// up to rotation.
long necklaces_brute(unsigned d, unsigned n)
{
    long total = 1;
    for (unsigned i = 0; i < n; ++i)
        total *= d;
    long primitive = 0;
    for (long code = 0; code < total; ++code) {
        std::vector<unsigned> w(n);
        long x = code;
        for (unsigned i = 0; i < n; ++i, x /= d)
            w[i] = static_cast<unsigned>(x % d);
        bool periodic = false;
        for (unsigned s = 1; s < n && !periodic; ++s) {
            if (n % s)
                continue;
            bool same = true;
            for (unsigned i = 0; i < n && same; ++i)
                same = w[i] == w[(i + s) % n];
            periodic = same;
        }
        primitive += !periodic;
    }
    return primitive / n;
}

} // namespace

TEST_CASE("Moebius function and divisors")
{
    const int mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(moebius(n) == mu[n]);
    CHECK(divisors(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<unsigned long>{1});
}

TEST_CASE("free group of rank 2 at p = 2")
{
    const DimensionTable t = dims_table(free_group(2), 2, 6);
    CHECK(t.w == zs({2, 1, 2, 3, 6, 9}));
    CHECK(t.c == zs({2, 3, 2, 6, 6, 11}));
    CHECK(t.a[5] == 32);
    CHECK(t.b_at(5) == Rational(32, 5));
    CHECK(galois_exponent(t, 1) == 0);
    CHECK(galois_exponent(t, 3) == 5);
    CHECK(galois_exponent(t, 7) == 30);
}

TEST_CASE("worked families")
{
    CHECK(c_of("free(2)", 2, 5) == zs({2, 3, 2, 6, 6}));
    CHECK(c_of("demushkin(2)", 2, 2) == zs({2, 2}));
    CHECK(c_of("demushkin(4)", 2, 4) == zs({4, 9, 16, 54}));
    CHECK(c_of("demushkin(4)", 3, 5) == zs({4, 5, 20, 45, 144}));
    CHECK(c_of("zp(1)", 2, 8) == zs({1, 1, 0, 1, 0, 0, 0, 1}));
    CHECK(c_of("zp(1)", 3, 9) == zs({1, 0, 1, 0, 0, 0, 0, 0, 1}));
    CHECK(c_of("superpyth(3)", 2, 8) == zs({4, 3, 1, 3, 1, 1, 1, 3}));
    CHECK(c_of("cyclic(3)", 3, 6) == zs({1, 0, 0, 0, 0, 0}));
    CHECK(c_of("free(0)", 5, 4) == zs({0, 0, 0, 0}));
}

TEST_CASE("w and c from an arbitrary series")
{
    // (1+t)/(1-t): log has b_n = 2/n for odd n and 0 for even n.
    const TruncSeries s = expand_rational(RationalFunction(TruncPoly{1, 1}, TruncPoly{1, -1}), 4);
    const DimensionTable t = dims_from_series(s, 2);
    CHECK(t.w == zs({2, -1, 0, 0}));
    CHECK(t.c == zs({2, 1, 0, 1}));

    CHECK_THROWS_AS(dims_from_series(TruncSeries{1, -1}, 2), NegativeDimension);
    const std::vector<Rational> half{Rational(1, 2)};
    CHECK_THROWS_AS(w_sequence(half), NonIntegralW);
    const std::vector<Integer> negative{1, -3};
    CHECK_THROWS_AS(c_sequence(negative, 2), NegativeDimension);
    CHECK_THROWS_AS(dims_from_series(TruncSeries{2, 1}, 2), ConstantTermNotOne);
}

TEST_CASE("necklace closed form against brute force")
{
    for (unsigned d = 1; d <= 3; ++d)
        for (unsigned n = 1; n <= 8; ++n)
            CHECK(w_free_closed(d, n) == necklaces_brute(d, n));
}

TEST_CASE("Demushkin w: both closed forms and the pipeline")
{
    CHECK(w_demushkin_closed(4, 3) == 16);
    for (unsigned d = 2; d <= 6; ++d) {
        const DimensionTable t = dims_table(demushkin_group(d), 3, 12);
        for (unsigned n = 1; n <= 12; ++n) {
            CHECK(w_demushkin_closed(d, n) == t.w_at(n));
            CHECK(w_demushkin_power_sums(d, n) == t.w_at(n));
        }
    }
}

TEST_CASE("power sums for free products of cyclic groups")
{
    // d = 1, p = 2: roots of 1 - t - t^2 give Lucas numbers.
    const long lucas[] = {1, 3, 4, 7, 11, 18, 29};
    for (unsigned n = 1; n <= 7; ++n)
        CHECK(power_sums_free_product_cp(1, 2, n) == lucas[n - 1]);
    // d = 1, p = 3: 1 - t - t^2 - t^3 gives 1, 3, 7, 11.
    CHECK(power_sums_free_product_cp(1, 3, 1) == 1);
    CHECK(power_sums_free_product_cp(1, 3, 2) == 3);
    CHECK(power_sums_free_product_cp(1, 3, 3) == 7);
    CHECK(power_sums_free_product_cp(1, 3, 4) == 11);
}

TEST_CASE("closed-form c tables")
{
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= 5; ++d) {
            const DimensionTable t = dims_table(free_group(d), p, 5);
            for (unsigned n = 1; n <= 5; ++n)
                CHECK(free_c_closed(d, p, n) == t.c_at(n));
        }
        for (unsigned d = 2; d <= 6; ++d) {
            const DimensionTable t = dims_table(demushkin_group(d), p, 5);
            for (unsigned n = 1; n <= 5; ++n)
                CHECK(demushkin_c_closed(d, p, n) == t.c_at(n));
        }
    }
    CHECK_THROWS_AS(free_c_closed(2, 2, 6), OutOfRange);
    CHECK(superpyth_c_closed(2, 1) == 3);
    CHECK(superpyth_c_closed(2, 8) == 2);
    CHECK(superpyth_c_closed(2, 6) == 1);
}

TEST_CASE("minimal generators of filtration subgroups")
{
    // Subgroups of index p^k: free gives 1 + p^k (d - 1), Demushkin gives p^k (d - 2) + 2.
    const DimensionTable f = dims_table(free_group(2), 2, 4);
    CHECK(min_generators(free_group(2), 2, 1, {}) == 2);
    CHECK(min_generators(free_group(2), 2, 2, std::span(f.c).first(1)) == 5);
    CHECK(min_generators(free_group(2), 2, 3, std::span(f.c).first(2)) == 33);

    const DimensionTable d = dims_table(demushkin_group(4), 2, 4);
    CHECK(min_generators(demushkin_group(4), 2, 2, std::span(d.c).first(1)) == 34);
    CHECK_THROWS_AS(min_generators(zp_group(2), 2, 2, std::span(d.c).first(1)), UnsupportedSpec);
}
