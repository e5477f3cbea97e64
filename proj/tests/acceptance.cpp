// Acceptance suite: one PASS/FAIL line per criterion. Expected values are
// produced here, independently of the library code paths under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "zass/dimensions.hpp"
#include "zass/error.hpp"
#include "zass/finite_group.hpp"
#include "zass/group_spec.hpp"
#include "zass/hall.hpp"
#include "zass/series.hpp"
#include "zass/verify.hpp"

using namespace zass;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::function<std::string()>& what)
    {
        if (!ok && pass) {
            pass = false;
            detail = what();
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass;
    std::string detail = o.detail;
    if (limit_s > 0 && secs >= limit_s) {
        pass = false;
        detail = "runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_s) + " s";
    }
    std::printf("criterion %2d: %s  %-58s (%.3f s", id, pass ? "PASS" : "FAIL", title, secs);
    if (limit_s > 0)
        std::printf(", limit %.0f s", limit_s);
    std::printf(")\n");
    if (!pass) {
        std::printf("              first counterexample: %s\n", detail.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

std::string str(const Integer& x) { return x.get_str(); }

// Exact quotient; the caller's formula must be divisible.
Integer q(const Integer& num, long den)
{
    Integer out;
    mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
    return out;
}

Integer power(long base, unsigned e)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), e);
    return out;
}

// c_1..c_5 of a free pro-p group of rank d, restated from the known tables.
Integer free_expected(long d, unsigned p, unsigned n)
{
    const Integer D = d;
    switch (n) {
    case 1: return D;
    case 2: return p == 2 ? q(D * D + D, 2) : q(D * D - D, 2);
    case 3: return p == 3 ? q(power(d, 3) + 2 * D, 3) : q(power(d, 3) - D, 3);
    case 4: return p == 2 ? q(power(d, 4) + D * D + 2 * D, 4) : q(power(d, 4) - D * D, 4);
    default: return p == 5 ? q(power(d, 5) + 4 * D, 5) : q(power(d, 5) - D, 5);
    }
}

Integer demushkin_expected(long d, unsigned p, unsigned n)
{
    const Integer D = d;
    switch (n) {
    case 1: return D;
    case 2: return p == 2 ? q(D * D + D - 2, 2) : q(D * D - D - 2, 2);
    case 3: return p == 3 ? q(power(d, 3) - D, 3) : q(power(d, 3) - 4 * D, 3);
    case 4: return p == 2 ? q(power(d, 4) - 3 * D * D + 2 * D, 4) : q(power(d, 4) - 5 * D * D + 4, 4);
    default: return p == 5 ? q(power(d, 5) - 5 * power(d, 3) + 9 * D, 5) : q(power(d, 5) - 5 * power(d, 3) + 4 * D, 5);
    }
}

using Coeffs = std::vector<Integer>;

Coeffs mul_trunc(const Coeffs& a, const Coeffs& b, std::size_t order)
{
    Coeffs out(order + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// 1/(1 - t^k) truncated.
Coeffs geometric(std::size_t k, std::size_t order)
{
    Coeffs out(order + 1, 0);
    for (std::size_t i = 0; i <= order; i += k)
        out[i] = 1;
    return out;
}

// (1+t)/(1-t)^d * prod_{odd k >= 3} 1/(1 - t^k), by repeated multiplication.
Coeffs superpyth_expected_series(unsigned d, std::size_t order)
{
    Coeffs s(order + 1, 0);
    s[0] = 1;
    if (order >= 1)
        s[1] = 1;
    for (unsigned i = 0; i < d; ++i)
        s = mul_trunc(s, geometric(1, order), order);
    for (std::size_t k = 3; k <= order; k += 2)
        s = mul_trunc(s, geometric(k, order), order);
    return s;
}

int mobius(unsigned n)
{
    int r = 1;
    for (unsigned f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            n /= f;
            if (n % f == 0)
                return 0;
            r = -r;
        }
    }
    return n > 1 ? -r : r;
}

Integer necklaces(unsigned d, unsigned n)
{
    Integer sum = 0;
    for (unsigned m = 1; m <= n; ++m)
        if (n % m == 0)
            sum += mobius(m) * power(d, n / m);
    return q(sum, n);
}

std::string join(const std::vector<Integer>& xs)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    return os.str();
}

GroupSpec cyclic_copies(unsigned p, unsigned copies)
{
    std::string text = "cyclic(" + std::to_string(p) + ")";
    for (unsigned i = 1; i < copies; ++i)
        text += " * cyclic(" + std::to_string(p) + ")";
    return parse_group_spec(text);
}

// prod ((1 - t^{np}) / (1 - t^n))^{c_n} = prod (1 + t^n + ... + t^{n(p-1)})^{c_n}.
std::vector<long long> jennings_expected(const std::vector<unsigned>& c, unsigned p)
{
    std::vector<long long> poly{1};
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t n = i + 1;
        for (unsigned rep = 0; rep < c[i]; ++rep) {
            std::vector<long long> next(poly.size() + n * (p - 1), 0);
            for (std::size_t a = 0; a < poly.size(); ++a)
                for (unsigned k = 0; k < p; ++k)
                    next[a + k * n] += poly[a];
            poly = std::move(next);
        }
    }
    return poly;
}

} // namespace

int main()
{
    criterion(1, "free group c_1..c_5 equal closed forms", 1.0, [] {
        Outcome o;
        for (unsigned p : {2u, 3u, 5u})
            for (unsigned d = 1; d <= 5; ++d) {
                const DimensionTable t = dims_table(free_group(d), p, 5);
                for (unsigned n = 1; n <= 5; ++n) {
                    const Integer want = free_expected(d, p, n);
                    o.expect(t.c_at(n) == want, [&] {
                        return "free(" + std::to_string(d) + ") p=" + std::to_string(p) + " n=" + std::to_string(n) +
                               " expected " + str(want) + " got " + str(t.c_at(n));
                    });
                }
            }
        return o;
    });

    criterion(2, "Demushkin c_1..c_5 equal closed forms", 1.0, [] {
        Outcome o;
        for (unsigned p : {2u, 3u, 5u})
            for (unsigned d = 2; d <= 6; ++d) {
                const DimensionTable t = dims_table(demushkin_group(d), p, 5);
                for (unsigned n = 1; n <= 5; ++n) {
                    const Integer want = demushkin_expected(d, p, n);
                    o.expect(t.c_at(n) == want, [&] {
                        return "demushkin(" + std::to_string(d) + ") p=" + std::to_string(p) + " n=" +
                               std::to_string(n) + " expected " + str(want) + " got " + str(t.c_at(n));
                    });
                }
            }
        return o;
    });

    criterion(3, "superpythagorean c_n pattern and product form", 0, [] {
        Outcome o;
        const std::size_t N = 20;
        for (unsigned d = 0; d <= 5; ++d) {
            const DimensionTable t = dims_table(superpyth_group(d), 2, N);
            std::vector<Integer> rule;
            for (unsigned n = 1; n <= N; ++n) {
                const bool pow2 = (n & (n - 1)) == 0;
                rule.push_back(n == 1 ? Integer(d + 1) : pow2 ? Integer(d) : Integer(1));
            }
            o.expect(t.c == rule, [&] {
                return "superpyth(" + std::to_string(d) + ") c = " + join(t.c) + " expected " + join(rule);
            });
            const Coeffs want = superpyth_expected_series(d, N);
            const TruncSeries from_rule = product_identity_rhs(rule, 2, N);
            const TruncSeries pipeline = hp_series(superpyth_group(d), 2, N);
            for (std::size_t n = 0; n <= N; ++n) {
                o.expect(from_rule[n] == Rational(want[n]) && pipeline[n] == Rational(want[n]), [&] {
                    return "superpyth(" + std::to_string(d) + ") t^" + std::to_string(n) + ": product form " +
                           str(want[n]) + ", from c " + from_rule[n].get_str() + ", pipeline " + pipeline[n].get_str();
                });
            }
        }
        return o;
    });

    criterion(4, "product identity round trip, built-in families, N = 24", 5.0, [] {
        Outcome o;
        const std::size_t N = 24;
        for (unsigned p : {2u, 3u})
            for (const GroupSpec& spec : builtin_specs(p)) {
                const TruncSeries series = hp_series(spec, p, N);
                const DimensionTable t = dims_table(spec, p, N);
                const TruncSeries rhs = product_identity_rhs(t.c, p, N);
                for (std::size_t n = 0; n <= N; ++n)
                    o.expect(rhs[n] == series[n], [&] {
                        return spec.to_string() + " p=" + std::to_string(p) + " t^" + std::to_string(n) +
                               " series " + series[n].get_str() + " product " + rhs[n].get_str();
                    });
            }
        return o;
    });

    criterion(5, "d+1 copies of C_2 vs free(d): equal for n >= 2, c_1 + 1", 0, [] {
        Outcome o;
        const std::size_t N = 24;
        for (unsigned d = 0; d <= 5; ++d) {
            const DimensionTable a = dims_table(cyclic_copies(2, d + 1), 2, N);
            const DimensionTable b = dims_table(free_group(d), 2, N);
            o.expect(a.c_at(1) == b.c_at(1) + 1, [&] {
                return "d=" + std::to_string(d) + " c_1: " + str(a.c_at(1)) + " vs " + str(b.c_at(1));
            });
            for (unsigned n = 2; n <= N; ++n)
                o.expect(a.c_at(n) == b.c_at(n), [&] {
                    return "d=" + std::to_string(d) + " n=" + std::to_string(n) + ": " + str(a.c_at(n)) + " vs " +
                           str(b.c_at(n));
                });
        }
        return o;
    });

    criterion(6, "U_{n+1}(F_2): dim G_(n)/G_(n+1) = 1, G_(n+1) = 1", 60.0, [] {
        Outcome o;
        for (unsigned n = 2; n <= 4; ++n) {
            const FiniteGroup g = unitriangular_group(n + 1, 2);
            const FiltrationResult f = zassenhaus_filtration_finite(g, n);
            o.expect(f.dims.at(n - 1) == 1 && f.at(n).size() == 2, [&] {
                return "U_" + std::to_string(n + 1) + "(F_2): |G_(n)| = " + std::to_string(f.at(n).size());
            });
            o.expect(f.at(n + 1).size() == 1, [&] {
                return "U_" + std::to_string(n + 1) + "(F_2): |G_(n+1)| = " + std::to_string(f.at(n + 1).size());
            });
        }
        return o;
    });

    criterion(7, "finite filtrations reproduce group-algebra dimensions", 0, [] {
        Outcome o;
        struct Named {
            std::string name;
            FiniteGroup g;
        };
        const std::vector<Named> groups{
            {"C_2", cyclic_p_group(2)},
            {"C_3", cyclic_p_group(3)},
            {"C_2 x C_2", direct_product(cyclic_p_group(2), cyclic_p_group(2))},
            {"U_3(F_2)", unitriangular_group(3, 2)},
            {"U_3(F_3)", unitriangular_group(3, 3)},
        };
        for (const Named& ng : groups) {
            const FiltrationResult f = zassenhaus_filtration_finite(ng.g);
            const std::vector<long long> want = jennings_expected(f.dims, ng.g.prime());
            const std::vector<unsigned long> a = group_algebra_aug_dims(ng.g, want.size() + 2);
            for (std::size_t n = 0; n < a.size(); ++n) {
                const long long expected = n < want.size() ? want[n] : 0;
                o.expect(static_cast<long long>(a[n]) == expected, [&] {
                    return ng.name + " t^" + std::to_string(n) + ": algebra " + std::to_string(a[n]) +
                           ", filtration " + std::to_string(expected);
                });
            }
        }
        return o;
    });

    criterion(8, "Hall counts and basis sizes", 0, [] {
        Outcome o;
        const unsigned N = 10;
        for (unsigned d = 1; d <= 4; ++d) {
            const HallSet h(d, N);
            for (unsigned n = 1; n <= N; ++n) {
                const Integer want = necklaces(d, n);
                o.expect(Integer(static_cast<unsigned long>(h.of_weight(n).size())) == want, [&] {
                    return "|C_" + std::to_string(n) + "| d=" + std::to_string(d) + ": " +
                           std::to_string(h.of_weight(n).size()) + " expected " + str(want);
                });
            }
            for (unsigned p : {2u, 3u}) {
                const DimensionTable t = dims_table(free_group(d), p, N);
                for (unsigned n = 1; n <= N; ++n) {
                    const std::size_t size = zassenhaus_basis(h, p, n).size();
                    o.expect(Integer(static_cast<unsigned long>(size)) == t.c_at(n), [&] {
                        return "basis d=" + std::to_string(d) + " p=" + std::to_string(p) + " n=" +
                               std::to_string(n) + ": " + std::to_string(size) + " vs c_n " + str(t.c_at(n));
                    });
                }
            }
        }
        return o;
    });

    criterion(9, "power sums vs Newton identities", 0, [] {
        Outcome o;
        const unsigned N = 15;
        for (unsigned p : {2u, 3u, 5u})
            for (unsigned d = 1; d <= 4; ++d) {
                // Roots of 1 - d t - ... - d t^p: s_n = d (s_{n-1} + ... + s_{n-p}) + n d [n <= p].
                std::vector<Integer> s(N + 1, 0);
                for (unsigned n = 1; n <= N; ++n) {
                    for (unsigned j = 1; j < n && j <= p; ++j)
                        s[n] += d * s[n - j];
                    if (n <= p)
                        s[n] += n * d;
                }
                for (unsigned n = 1; n <= N; ++n) {
                    const Integer got = power_sums_free_product_cp(d, p, n);
                    o.expect(got == s[n], [&] {
                        return "d=" + std::to_string(d) + " p=" + std::to_string(p) + " n=" + std::to_string(n) +
                               ": " + str(got) + " expected " + str(s[n]);
                    });
                }
            }
        const long lucas[] = {1, 3, 4, 7, 11};
        for (unsigned n = 1; n <= 5; ++n)
            o.expect(power_sums_free_product_cp(1, 2, n) == lucas[n - 1],
                     [&] { return "Lucas row n=" + std::to_string(n); });
        return o;
    });

    criterion(10, "integrality, c_n >= 0, w/c bookkeeping, built-in groups", 0, [] {
        Outcome o;
        const std::size_t N = 24;
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            std::vector<GroupSpec> grid = builtin_specs(p);
            grid.push_back(direct_product(free_product(free_group(2), cyclic_group(p)), zp_group(1)));
            grid.push_back(free_product(direct_product(demushkin_group(2), cyclic_group(p)), free_group(3)));
            for (const GroupSpec& spec : grid) {
                const std::string name = spec.to_string() + " p=" + std::to_string(p);
                DimensionTable t;
                try {
                    t = dims_table(spec, p, N);
                } catch (const IntegralityError& e) {
                    o.expect(false, [&] { return name + ": " + e.what(); });
                    continue;
                }
                for (unsigned n = 1; n <= N; ++n) {
                    // w_n recomputed from b by Moebius inversion.
                    Rational w = 0;
                    for (unsigned m = 1; m <= n; ++m)
                        if (n % m == 0)
                            w += Rational(mobius(n / m) * static_cast<long>(m)) * t.b_at(m);
                    w /= n;
                    w.canonicalize();
                    o.expect(w.get_den() == 1 && w.get_num() == t.w_at(n), [&] {
                        return name + " w_" + std::to_string(n) + " = " + w.get_str();
                    });
                    o.expect(t.c_at(n) >= 0, [&] { return name + " c_" + std::to_string(n) + " < 0"; });
                    const Integer want = n % p ? t.w_at(n) : t.c_at(n / p) + t.w_at(n);
                    o.expect(t.c_at(n) == want, [&] {
                        return name + " c_" + std::to_string(n) + " = " + str(t.c_at(n)) + ", bookkeeping gives " +
                               str(want);
                    });
                }
            }
        }
        return o;
    });

    std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
