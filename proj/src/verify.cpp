#include "zass/verify.hpp"

#include <algorithm>
#include <sstream>

#include "zass/dimensions.hpp"
#include "zass/error.hpp"
#include "zass/finite_group.hpp"
#include "zass/hall.hpp"

namespace zass {

bool SuiteReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void SuiteReport::merge(SuiteReport other)
{
    for (CheckResult& c : other.checks)
        checks.push_back(std::move(c));
}

const CheckResult* SuiteReport::first_failure() const
{
    for (const CheckResult& c : checks)
        if (!c.pass)
            return &c;
    return nullptr;
}

namespace {

class Check {
public:
    explicit Check(std::string name) { result_.name = std::move(name); }

    void expect(bool cond, const auto& describe)
    {
        if (!cond && result_.pass) {
            result_.pass = false;
            result_.detail = describe();
        }
    }

    void fail(const std::string& detail) { expect(false, [&] { return detail; }); }

    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string mismatch(const std::string& where, std::size_t n, const auto& expected, const auto& got)
{
    std::ostringstream os;
    os << where << ", n = " << n << ": expected " << expected << ", got " << got;
    return os.str();
}

GroupSpec cyclic_free_product(unsigned p, unsigned copies)
{
    GroupSpec g = cyclic_group(p);
    for (unsigned i = 1; i < copies; ++i)
        g = free_product(std::move(g), cyclic_group(p));
    return g;
}

} // namespace

std::vector<GroupSpec> builtin_specs(unsigned p)
{
    std::vector<GroupSpec> specs;
    for (unsigned d = 0; d <= 5; ++d)
        specs.push_back(free_group(d));
    for (unsigned d = 2; d <= 6; ++d)
        specs.push_back(demushkin_group(d));
    for (unsigned d = 0; d <= 3; ++d)
        specs.push_back(zp_group(d));
    for (unsigned copies = 1; copies <= 4; ++copies)
        specs.push_back(cyclic_free_product(p, copies));
    for (unsigned d = 1; d <= 3; ++d)
        specs.push_back(free_product(cyclic_group(p), free_group(d)));
    specs.push_back(free_product(free_product(demushkin_group(3), demushkin_group(4)), free_group(1)));
    specs.push_back(free_product(demushkin_group(2), cyclic_group(p)));
    specs.push_back(direct_product(free_group(2), free_group(2)));
    specs.push_back(direct_product(free_group(1), zp_group(2)));
    specs.push_back(direct_product(cyclic_group(p), cyclic_group(p)));
    specs.push_back(free_product(direct_product(cyclic_group(p), cyclic_group(p)), free_group(1)));
    if (p == 2) {
        for (unsigned d = 0; d <= 5; ++d)
            specs.push_back(superpyth_group(d));
        specs.push_back(cyclic_free_product(2, 6));
    }
    return specs;
}

std::vector<Integer> newton_power_sums(const std::vector<Integer>& q, unsigned max_n)
{
    std::vector<Integer> s(max_n + 1);
    for (unsigned n = 1; n <= max_n; ++n) {
        Integer v = n <= q.size() ? Integer(n * q[n - 1]) : Integer(0);
        for (unsigned j = 1; j < n && j <= q.size(); ++j)
            v += q[j - 1] * s[n - j];
        s[n] = v;
    }
    return s;
}

// ---- roundtrip ---------------------------------------------------------------

SuiteReport run_roundtrip_suite(unsigned p, std::size_t order)
{
    Check roundtrip("product identity reproduces P(t) (p = " + std::to_string(p) + ", N = " +
                    std::to_string(order) + ")");
    Check integrality("w_n integral and c_n >= 0");
    Check bookkeeping("c_n = w_n for gcd(n,p) = 1; c_n - c_{n/p} = w_n for p | n");
    Check direct("c_n additive over direct products");

    for (const GroupSpec& spec : builtin_specs(p)) {
        const std::string name = spec.to_string();
        DimensionTable t;
        try {
            t = dims_table(spec, p, order);
        } catch (const IntegralityError& e) {
            integrality.fail(name + ": " + e.what());
            continue;
        }
        const TruncSeries series = hp_series(spec, p, order);
        const TruncSeries rhs = product_identity_rhs(t.c, p, order);
        for (std::size_t n = 0; n <= order; ++n)
            roundtrip.expect(rhs[n] == series[n],
                             [&] { return mismatch(name, n, series[n].get_str(), rhs[n].get_str()); });
        for (std::size_t n = 1; n <= order; ++n) {
            integrality.expect(t.c_at(n) >= 0, [&] { return mismatch(name, n, ">= 0", t.c_at(n)); });
            Integer expected = t.w_at(n);
            if (n % p == 0)
                expected += t.c_at(n / p);
            bookkeeping.expect(t.c_at(n) == expected, [&] { return mismatch(name, n, expected, t.c_at(n)); });
        }
        if (const auto* dp = spec.as<DirectProduct>()) {
            const DimensionTable l = dims_table(*dp->left, p, order);
            const DimensionTable r = dims_table(*dp->right, p, order);
            for (std::size_t n = 1; n <= order; ++n) {
                const Integer sum = l.c_at(n) + r.c_at(n);
                direct.expect(t.c_at(n) == sum, [&] { return mismatch(name, n, sum, t.c_at(n)); });
            }
        }
    }
    SuiteReport report;
    report.checks = {roundtrip.done(), integrality.done(), bookkeeping.done(), direct.done()};
    return report;
}

// ---- closed forms --------------------------------------------------------------

SuiteReport run_closedforms_suite(unsigned p, std::size_t order)
{
    SuiteReport report;
    const std::size_t n_max = std::min<std::size_t>(order, 24);

    Check rational("closed-form rational functions expand to P(t)");
    for (const GroupSpec& spec : builtin_specs(p)) {
        const SeriesRecipe recipe = closed_form(spec, p);
        const TruncSeries series = hp_series(spec, p, order);
        const TruncSeries expanded = recipe.has_closed_form()
                                         ? expand_rational(recipe.rational_function(), order)
                                         : series;
        for (std::size_t n = 0; n <= order; ++n)
            rational.expect(expanded[n] == series[n], [&] {
                return mismatch(spec.to_string(), n, series[n].get_str(), expanded[n].get_str());
            });
    }
    report.checks.push_back(rational.done());

    Check necklace("necklace formula = w_n(free(d)), d <= 5");
    for (unsigned d = 0; d <= 5; ++d) {
        const DimensionTable t = dims_table(free_group(d), p, n_max);
        for (unsigned n = 1; n <= n_max; ++n) {
            const Integer closed = w_free_closed(d, n);
            necklace.expect(closed == t.w_at(n),
                            [&] { return mismatch("free(" + std::to_string(d) + ")", n, t.w_at(n), closed); });
        }
    }
    report.checks.push_back(necklace.done());

    Check demushkin_w("binomial and power-sum forms = w_n(demushkin(d)), d <= 6");
    for (unsigned d = 2; d <= 6; ++d) {
        const DimensionTable t = dims_table(demushkin_group(d), p, n_max);
        for (unsigned n = 1; n <= n_max; ++n) {
            const Integer binom = w_demushkin_closed(d, n);
            const Integer sums = w_demushkin_power_sums(d, n);
            const std::string name = "demushkin(" + std::to_string(d) + ")";
            demushkin_w.expect(binom == t.w_at(n), [&] { return mismatch(name, n, t.w_at(n), binom); });
            demushkin_w.expect(sums == t.w_at(n), [&] { return mismatch(name, n, t.w_at(n), sums); });
        }
    }
    report.checks.push_back(demushkin_w.done());

    Check c_tables("tabulated c_1..c_5 for free(d) and demushkin(d)");
    const std::size_t c_depth = std::min<std::size_t>(order, 5);
    for (unsigned d = 1; d <= 5; ++d) {
        const DimensionTable t = dims_table(free_group(d), p, c_depth);
        for (unsigned n = 1; n <= c_depth; ++n) {
            const Integer closed = free_c_closed(d, p, n);
            c_tables.expect(closed == t.c_at(n),
                            [&] { return mismatch("free(" + std::to_string(d) + ")", n, closed, t.c_at(n)); });
        }
    }
    for (unsigned d = 2; d <= 6; ++d) {
        const DimensionTable t = dims_table(demushkin_group(d), p, c_depth);
        for (unsigned n = 1; n <= c_depth; ++n) {
            const Integer closed = demushkin_c_closed(d, p, n);
            c_tables.expect(closed == t.c_at(n), [&] {
                return mismatch("demushkin(" + std::to_string(d) + ")", n, closed, t.c_at(n));
            });
        }
    }
    report.checks.push_back(c_tables.done());

    Check power_sums("multinomial power sums = Newton identities (p = " + std::to_string(p) + ")");
    for (unsigned d = 0; d <= 4; ++d) {
        const std::vector<Integer> q(p, Integer(d));
        const std::vector<Integer> newton = newton_power_sums(q, 15);
        for (unsigned n = 1; n <= 15; ++n) {
            const Integer multi = power_sums_free_product_cp(d, p, n);
            power_sums.expect(multi == newton[n],
                              [&] { return mismatch("d = " + std::to_string(d), n, newton[n], multi); });
        }
    }
    report.checks.push_back(power_sums.done());

    Check hall("Hall commutator counts and Zassenhaus basis sizes, d <= 4, n <= 10");
    for (unsigned d = 1; d <= 4; ++d) {
        const HallSet set(d, 10);
        const DimensionTable t = dims_table(free_group(d), p, 10);
        for (unsigned n = 1; n <= 10; ++n) {
            const Integer count = static_cast<unsigned long>(set.of_weight(n).size());
            const Integer closed = w_free_closed(d, n);
            const std::string name = "d = " + std::to_string(d);
            hall.expect(count == closed, [&] { return mismatch(name + " |C_n|", n, closed, count); });
            const Integer basis = static_cast<unsigned long>(zassenhaus_basis(set, p, n).size());
            hall.expect(basis == t.c_at(n), [&] { return mismatch(name + " basis", n, t.c_at(n), basis); });
        }
    }
    report.checks.push_back(hall.done());

    if (p == 2) {
        Check superpyth("superpyth(d) c_n: d+1, d at powers of 2, 1 elsewhere");
        const std::size_t sp_max = std::min<std::size_t>(order, 20);
        for (unsigned d = 0; d <= 5; ++d) {
            const DimensionTable t = dims_table(superpyth_group(d), 2, sp_max);
            for (unsigned n = 1; n <= sp_max; ++n) {
                const Integer closed = superpyth_c_closed(d, n);
                superpyth.expect(closed == t.c_at(n), [&] {
                    return mismatch("superpyth(" + std::to_string(d) + ")", n, closed, t.c_at(n));
                });
            }
        }
        report.checks.push_back(superpyth.done());

        Check index_two("free(d) vs d+1 copies of C_2: equal c_n for n >= 2, c_1 off by one");
        Check epsilon("w_n(free(d)) - w_n(d+1 copies of C_2) = -1, 1, 0, 0, ...");
        for (unsigned d = 0; d <= 5; ++d) {
            const DimensionTable h = dims_table(free_group(d), 2, n_max);
            const DimensionTable g = dims_table(cyclic_free_product(2, d + 1), 2, n_max);
            const std::string name = "d = " + std::to_string(d);
            index_two.expect(g.c_at(1) == h.c_at(1) + 1,
                             [&] { return mismatch(name, 1, Integer(h.c_at(1) + 1), g.c_at(1)); });
            for (unsigned n = 2; n <= n_max; ++n)
                index_two.expect(g.c_at(n) == h.c_at(n), [&] { return mismatch(name, n, h.c_at(n), g.c_at(n)); });
            for (unsigned n = 1; n <= n_max; ++n) {
                const Integer eps = n == 1 ? -1 : (n == 2 ? 1 : 0);
                const Integer diff = h.w_at(n) - g.w_at(n);
                epsilon.expect(diff == eps, [&] { return mismatch(name, n, eps, diff); });
            }
        }
        report.checks.push_back(index_two.done());
        report.checks.push_back(epsilon.done());
    }
    return report;
}

// ---- finite groups -------------------------------------------------------------

namespace {

std::vector<unsigned long> trimmed(std::vector<unsigned long> v)
{
    while (v.size() > 1 && v.back() == 0)
        v.pop_back();
    return v;
}

std::string join(const auto& v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

Matrix block(const Matrix& x, unsigned m, unsigned offset, unsigned size)
{
    Matrix b(static_cast<std::size_t>(size) * size);
    for (unsigned i = 0; i < size; ++i)
        for (unsigned j = 0; j < size; ++j)
            b[i * size + j] = x[(offset + i) * m + offset + j];
    return b;
}

FiniteGroup cyclic_four()
{
    const FiniteGroup u3 = unitriangular_group(3, 2);
    Matrix x = identity_matrix(3);
    x[0 * 3 + 1] = 1;
    x[1 * 3 + 2] = 1;
    const std::uint32_t gen = u3.index_of(x);
    return subgroup_group(u3, std::span<const std::uint32_t>(&gen, 1));
}

void check_direct_product(Check& check, const std::string& name, const FiniteGroup& g1, const FiniteGroup& g2)
{
    const FiniteGroup g = direct_product(g1, g2);
    const FiltrationResult f = zassenhaus_filtration_finite(g);
    const FiltrationResult f1 = zassenhaus_filtration_finite(g1);
    const FiltrationResult f2 = zassenhaus_filtration_finite(g2);
    auto level = [](const FiltrationResult& r, std::size_t n) -> const Subset& {
        return r.subgroups[std::min(n, r.subgroups.size()) - 1];
    };
    const std::size_t depth = std::max({f.subgroups.size(), f1.subgroups.size(), f2.subgroups.size()});
    for (std::size_t n = 1; n <= depth; ++n) {
        const Subset& s = level(f, n);
        const Subset& s1 = level(f1, n);
        const Subset& s2 = level(f2, n);
        check.expect(s.size() == s1.size() * s2.size(),
                     [&] { return mismatch(name + " |G_(n)|", n, s1.size() * s2.size(), s.size()); });
        std::vector<std::uint8_t> in1(g1.order(), 0), in2(g2.order(), 0);
        for (std::uint32_t x : s1)
            in1[x] = 1;
        for (std::uint32_t x : s2)
            in2[x] = 1;
        for (std::uint32_t z : s) {
            const Matrix& m = g.element(z);
            const bool inside = in1[g1.index_of(block(m, g.dim(), 0, g1.dim()))] &&
                                in2[g2.index_of(block(m, g.dim(), g1.dim(), g2.dim()))];
            check.expect(inside, [&] { return name + ": G_(" + std::to_string(n) + ") leaves the product"; });
        }
    }
}

} // namespace

SuiteReport run_finite_suite(bool large)
{
    SuiteReport report;

    struct Named {
        std::string name;
        FiniteGroup group;
    };
    const FiniteGroup c2 = cyclic_p_group(2);
    const FiniteGroup c3 = cyclic_p_group(3);
    std::vector<Named> small;
    small.push_back({"C_2", c2});
    small.push_back({"C_3", c3});
    small.push_back({"C_2 x C_2", direct_product(c2, c2)});
    small.push_back({"U_3(F_2)", unitriangular_group(3, 2)});
    small.push_back({"U_3(F_3)", unitriangular_group(3, 3)});

    Check jennings("finite filtration dims reproduce group-algebra dims");
    Check audit("G_(n) normal and nested");
    for (const Named& g : small) {
        const FiltrationResult f = zassenhaus_filtration_finite(g.group);
        const std::vector<long long> poly = jennings_polynomial(f.dims, g.group.prime());
        const std::vector<unsigned long> a = trimmed(group_algebra_aug_dims(g.group, poly.size() + 1));
        std::vector<unsigned long> expected(poly.begin(), poly.end());
        jennings.expect(a == trimmed(expected),
                        [&] { return g.name + ": expected " + join(expected) + ", got " + join(a); });
        for (std::size_t n = 1; n <= f.subgroups.size(); ++n) {
            audit.expect(is_normal(g.group, f.at(n)),
                         [&] { return g.name + ": G_(" + std::to_string(n) + ") not normal"; });
            if (n > 1)
                audit.expect(is_subset(f.at(n), f.at(n - 1)),
                             [&] { return g.name + ": G_(" + std::to_string(n) + ") not nested"; });
        }
    }
    report.checks.push_back(jennings.done());

    Check unipotent("U_{n+1}(F_2): G_(n) has order p, G_(n+1) = 1, n = 2..4");
    std::vector<unsigned> sizes{3, 4, 5};
    if (large)
        sizes.push_back(6);
    for (unsigned m : sizes) {
        const FiniteGroup u = unitriangular_group(m, 2);
        const unsigned n = m - 1;
        const FiltrationResult f = zassenhaus_filtration_finite(u, n);
        const std::string name = "U_" + std::to_string(m) + "(F_2)";
        unipotent.expect(f.dims[n - 1] == 1, [&] { return mismatch(name + " c_n", n, 1, f.dims[n - 1]); });
        unipotent.expect(f.at(n + 1).size() == 1,
                         [&] { return mismatch(name + " |G_(n+1)|", n + 1, 1, f.at(n + 1).size()); });
        for (std::size_t k = 1; k <= f.subgroups.size(); ++k) {
            audit.expect(is_normal(u, f.at(k)), [&] { return name + ": G_(" + std::to_string(k) + ") not normal"; });
            if (k > 1)
                audit.expect(is_subset(f.at(k), f.at(k - 1)),
                             [&] { return name + ": G_(" + std::to_string(k) + ") not nested"; });
        }
    }
    report.checks.push_back(unipotent.done());
    report.checks.push_back(audit.done());

    Check products("filtration of a direct product is the product of filtrations");
    check_direct_product(products, "C_2 x C_2", c2, c2);
    check_direct_product(products, "C_2 x C_4", c2, cyclic_four());
    check_direct_product(products, "U_3(F_2) x C_2", unitriangular_group(3, 2), c2);
    report.checks.push_back(products.done());

    Check kernels("serial and parallel kernels agree");
    {
        const FiniteGroup u = unitriangular_group(4, 2);
        const FiltrationResult s = zassenhaus_filtration_finite(u, 0, Exec::serial);
        const FiltrationResult par = zassenhaus_filtration_finite(u, 0, Exec::parallel);
        kernels.expect(s.subgroups == par.subgroups, [] { return std::string("U_4(F_2) filtration differs"); });
        const auto a_s = group_algebra_aug_dims(u, 8, Exec::serial);
        const auto a_p = group_algebra_aug_dims(u, 8, Exec::parallel);
        kernels.expect(a_s == a_p, [&] { return "U_4(F_2) algebra dims " + join(a_s) + " vs " + join(a_p); });
    }
    report.checks.push_back(kernels.done());
    return report;
}

} // namespace zass
