#include "zass/finite_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "zass/error.hpp"

namespace zass {

std::size_t element_cap()
{
    if (const char* env = std::getenv("ZASS_MAX_ELEMENTS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return kDefaultElementCap;
}

Matrix identity_matrix(unsigned m)
{
    Matrix id(static_cast<std::size_t>(m) * m, 0);
    for (unsigned i = 0; i < m; ++i)
        id[i * m + i] = 1;
    return id;
}

Matrix elementary_matrix(unsigned m, unsigned row, unsigned col, unsigned value)
{
    Matrix e = identity_matrix(m);
    e[row * m + col] = static_cast<std::uint8_t>(value);
    return e;
}

Matrix FiniteGroup::multiply(const Matrix& a, const Matrix& b) const
{
    Matrix c(a.size(), 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = i; j < m_; ++j) {
            unsigned s = 0;
            for (unsigned k = i; k <= j; ++k)
                s += static_cast<unsigned>(a[i * m_ + k]) * b[k * m_ + j];
            c[i * m_ + j] = static_cast<std::uint8_t>(s % p_);
        }
    return c;
}

std::uint32_t FiniteGroup::index_of(const Matrix& x) const
{
    auto it = index_.find(x);
    if (it == index_.end())
        throw Error("matrix is not an element of the group");
    return it->second;
}

FiniteGroup FiniteGroup::generated_by(unsigned m, unsigned p, const std::vector<Matrix>& gens,
                                      std::size_t cap)
{
    if (p < 2 || p > 251)
        throw Error("prime must fit packed byte entries");
    FiniteGroup g(m, p);
    const Matrix id = identity_matrix(m);
    g.elements_.push_back(id);
    g.index_.emplace(id, 0);
    std::vector<Matrix> gen_mats;
    for (const Matrix& x : gens) {
        if (x.size() != id.size())
            throw Error("generator has the wrong size");
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j <= i; ++j)
                if (x[i * m + j] != (i == j ? 1 : 0))
                    throw Error("generator is not unitriangular");
        gen_mats.push_back(x);
    }
    // Breadth-first closure under right multiplication by generators; in a
    // finite group this is the generated subgroup.
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (const Matrix& s : gen_mats) {
            Matrix y = g.multiply(g.elements_[head], s);
            if (g.index_.count(y))
                continue;
            if (g.elements_.size() >= cap)
                throw TooLarge("group exceeds the element cap of " + std::to_string(cap));
            g.index_.emplace(y, static_cast<std::uint32_t>(g.elements_.size()));
            g.elements_.push_back(std::move(y));
        }
    }
    for (const Matrix& s : gen_mats)
        g.generators_.push_back(g.index_.at(s));

    const std::size_t n = g.elements_.size();
    if (n <= kTableCap) {
        g.table_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                g.table_[a * n + b] = g.index_.at(g.multiply(g.elements_[a], g.elements_[b]));
    }
    g.inverse_.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        // Unitriangular elements satisfy x^{p^k} = 1, so walk powers.
        std::uint32_t prev = a, cur = a;
        while (cur != 0) {
            prev = cur;
            cur = g.mul(cur, a);
        }
        g.inverse_[a] = prev;
    }
    return g;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const
{
    if (!table_.empty())
        return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return index_.at(multiply(elements_[a], elements_[b]));
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, unsigned long e) const
{
    std::uint32_t result = identity(), base = a;
    for (; e; e >>= 1) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::uint32_t FiniteGroup::commutator(std::uint32_t a, std::uint32_t b) const
{
    return mul(mul(inv(a), inv(b)), mul(a, b));
}

Subset FiniteGroup::all() const
{
    Subset s(elements_.size());
    for (std::uint32_t i = 0; i < s.size(); ++i)
        s[i] = i;
    return s;
}

FiniteGroup unitriangular_group(unsigned m, unsigned p, std::size_t cap)
{
    if (m == 0)
        throw Error("matrix size must be positive");
    long double expected = 1;
    for (unsigned i = 0; i < m * (m - 1) / 2; ++i)
        expected *= p;
    if (expected > static_cast<long double>(cap))
        throw TooLarge("U_" + std::to_string(m) + "(F_" + std::to_string(p) + ") exceeds the element cap of " +
                       std::to_string(cap));
    std::vector<Matrix> gens;
    for (unsigned i = 0; i + 1 < m; ++i)
        gens.push_back(elementary_matrix(m, i, i + 1));
    return FiniteGroup::generated_by(m, p, gens, cap);
}

FiniteGroup cyclic_p_group(unsigned p)
{
    return unitriangular_group(2, p);
}

namespace {

Matrix block_diag(const Matrix& a, unsigned ma, const Matrix& b, unsigned mb)
{
    const unsigned m = ma + mb;
    Matrix c = identity_matrix(m);
    for (unsigned i = 0; i < ma; ++i)
        for (unsigned j = 0; j < ma; ++j)
            c[i * m + j] = a[i * ma + j];
    for (unsigned i = 0; i < mb; ++i)
        for (unsigned j = 0; j < mb; ++j)
            c[(ma + i) * m + ma + j] = b[i * mb + j];
    return c;
}

} // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap)
{
    if (g.prime() != h.prime())
        throw Error("direct product of groups over different primes");
    const Matrix idg = identity_matrix(g.dim()), idh = identity_matrix(h.dim());
    std::vector<Matrix> gens;
    for (std::uint32_t s : g.generators())
        gens.push_back(block_diag(g.element(s), g.dim(), idh, h.dim()));
    for (std::uint32_t s : h.generators())
        gens.push_back(block_diag(idg, g.dim(), h.element(s), h.dim()));
    return FiniteGroup::generated_by(g.dim() + h.dim(), g.prime(), gens, cap);
}

FiniteGroup subgroup_group(const FiniteGroup& g, std::span<const std::uint32_t> gens)
{
    std::vector<Matrix> mats;
    for (std::uint32_t s : gens)
        mats.push_back(g.element(s));
    return FiniteGroup::generated_by(g.dim(), g.prime(), mats, g.order());
}

Subset subgroup_closure(const FiniteGroup& g, std::span<const std::uint32_t> gens)
{
    std::vector<std::uint8_t> member(g.order(), 0);
    Subset elems{g.identity()};
    member[g.identity()] = 1;
    std::vector<std::uint32_t> used;
    for (std::uint32_t s : gens) {
        if (member[s])
            continue;
        used.push_back(s);
        // Re-close: every element times every generator used so far.
        for (std::size_t head = 0; head < elems.size(); ++head)
            for (std::uint32_t t : used) {
                const std::uint32_t y = g.mul(elems[head], t);
                if (!member[y]) {
                    member[y] = 1;
                    elems.push_back(y);
                }
            }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool is_subset(const Subset& a, const Subset& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_normal(const FiniteGroup& g, const Subset& h)
{
    std::vector<std::uint8_t> member(g.order(), 0);
    for (std::uint32_t x : h)
        member[x] = 1;
    for (std::uint32_t s : g.generators())
        for (std::uint32_t x : h)
            if (!member[g.mul(g.mul(g.inv(s), x), s)])
                return false;
    return true;
}

namespace {

Subset marked(const std::vector<std::uint8_t>& marks)
{
    Subset s;
    for (std::uint32_t i = 0; i < marks.size(); ++i)
        if (marks[i])
            s.push_back(i);
    return s;
}

unsigned log_p_exact(std::size_t ratio, unsigned p)
{
    unsigned k = 0;
    while (ratio > 1) {
        if (ratio % p != 0)
            throw Error("subgroup index is not a power of p");
        ratio /= p;
        ++k;
    }
    return k;
}

} // namespace

FiltrationResult zassenhaus_filtration_finite(const FiniteGroup& g, std::size_t depth, Exec exec)
{
    const unsigned p = g.prime();
    FiltrationResult out;
    out.subgroups.push_back(g.all());
    for (std::size_t n = 2; depth == 0 || n <= depth + 1; ++n) {
        if (depth == 0 && out.subgroups.back().size() == 1)
            break;
        std::vector<std::uint8_t> marks(g.order(), 0);
        const std::size_t up = (n + p - 1) / p;
        mark_powers(g, out.subgroups[up - 1], p, marks, exec);
        for (std::size_t i = 1; i < n; ++i)
            mark_commutators(g, out.subgroups[i - 1], out.subgroups[n - i - 1], marks, exec);
        out.subgroups.push_back(subgroup_closure(g, marked(marks)));
    }
    for (std::size_t n = 1; n < out.subgroups.size(); ++n)
        out.dims.push_back(log_p_exact(out.subgroups[n - 1].size() / out.subgroups[n].size(), p));
    return out;
}

namespace {

// Row for x * h in F_p[G], where x is a row and h a group element:
// coefficient of g*h is the coefficient of g in x.
Row right_multiply(const FiniteGroup& g, const Row& x, std::uint32_t h)
{
    Row y(x.size(), 0);
    for (std::uint32_t e = 0; e < x.size(); ++e)
        if (x[e])
            y[g.mul(e, h)] = x[e];
    return y;
}

// x * (h - 1)
Row times_h_minus_one(const FiniteGroup& g, const Row& x, std::uint32_t h)
{
    const unsigned p = g.prime();
    Row y = right_multiply(g, x, h);
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = (y[i] + p - x[i]) % p;
    return y;
}

std::vector<unsigned long> aug_dims(const FiniteGroup& g, std::size_t depth,
                                    std::span<const std::uint32_t> multipliers, Exec exec)
{
    const std::size_t n = g.order();
    if (n > kAlgebraCap)
        throw TooLarge("group algebra of order " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(kAlgebraCap));
    const unsigned p = g.prime();
    // I is spanned by g - 1 for g != 1.
    std::vector<Row> basis;
    for (std::uint32_t e = 1; e < n; ++e) {
        Row r(n, 0);
        r[e] = 1;
        r[g.identity()] = p - 1;
        basis.push_back(std::move(r));
    }
    basis = row_basis_mod_p(std::move(basis), p, exec);
    std::vector<std::size_t> ranks{n, basis.size()};
    while (ranks.size() < depth + 2) {
        if (basis.empty()) {
            ranks.push_back(0);
            continue;
        }
        std::vector<Row> next;
        next.reserve(basis.size() * multipliers.size());
        for (const Row& x : basis)
            for (std::uint32_t h : multipliers)
                next.push_back(times_h_minus_one(g, x, h));
        basis = row_basis_mod_p(std::move(next), p, exec);
        ranks.push_back(basis.size());
    }
    std::vector<unsigned long> a;
    for (std::size_t k = 0; k <= depth; ++k)
        a.push_back(ranks[k] - ranks[k + 1]);
    return a;
}

} // namespace

std::vector<unsigned long> group_algebra_aug_dims(const FiniteGroup& g, std::size_t depth, Exec exec)
{
    return aug_dims(g, depth, g.generators(), exec);
}

std::vector<unsigned long> group_algebra_aug_dims_all_elements(const FiniteGroup& g, std::size_t depth)
{
    const Subset everything = g.all();
    return aug_dims(g, depth, everything, Exec::serial);
}

std::vector<long long> jennings_polynomial(std::span<const unsigned> c, unsigned p)
{
    std::vector<long long> poly{1};
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t n = i + 1;
        for (unsigned e = 0; e < c[i]; ++e) {
            // multiply by 1 + t^n + ... + t^{n(p-1)}
            std::vector<long long> next(poly.size() + n * (p - 1), 0);
            for (std::size_t k = 0; k < poly.size(); ++k)
                for (unsigned j = 0; j < p; ++j)
                    next[k + n * j] += poly[k];
            poly = std::move(next);
        }
    }
    return poly;
}

} // namespace zass
