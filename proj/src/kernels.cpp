#include "zass/kernels.hpp"

#include <omp.h>

#include <utility>

#include "zass/error.hpp"
#include "zass/finite_group.hpp"

namespace zass {

std::size_t MatrixHash::operator()(const std::vector<std::uint8_t>& m) const noexcept
{
    // FNV-1a
    std::size_t h = 1469598103934665603ull;
    for (std::uint8_t b : m) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void merge_marks(std::vector<std::uint8_t>& into, const std::vector<std::uint8_t>& from)
{
    for (std::size_t i = 0; i < into.size(); ++i)
        into[i] |= from[i];
}

} // namespace

void mark_commutators(const FiniteGroup& g, std::span<const std::uint32_t> lhs,
                      std::span<const std::uint32_t> rhs, std::vector<std::uint8_t>& marks, Exec exec)
{
    marks.resize(g.order(), 0);
    const long n = static_cast<long>(lhs.size());
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i) {
            const std::uint32_t a = lhs[i];
            const std::uint32_t a_inv = g.inv(a);
            for (std::uint32_t b : rhs)
                marks[g.mul(g.mul(a_inv, g.inv(b)), g.mul(a, b))] = 1;
        }
        return;
    }
#pragma omp parallel
    {
        std::vector<std::uint8_t> local(g.order(), 0);
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < n; ++i) {
            const std::uint32_t a = lhs[i];
            const std::uint32_t a_inv = g.inv(a);
            for (std::uint32_t b : rhs)
                local[g.mul(g.mul(a_inv, g.inv(b)), g.mul(a, b))] = 1;
        }
#pragma omp critical
        merge_marks(marks, local);
    }
}

void mark_powers(const FiniteGroup& g, std::span<const std::uint32_t> xs, unsigned long exponent,
                 std::vector<std::uint8_t>& marks, Exec exec)
{
    marks.resize(g.order(), 0);
    const long n = static_cast<long>(xs.size());
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i)
            marks[g.pow(xs[i], exponent)] = 1;
        return;
    }
#pragma omp parallel
    {
        std::vector<std::uint8_t> local(g.order(), 0);
#pragma omp for
        for (long i = 0; i < n; ++i)
            local[g.pow(xs[i], exponent)] = 1;
#pragma omp critical
        merge_marks(marks, local);
    }
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, unsigned p)
{
    // a^{p-2} mod p
    std::uint64_t result = 1, base = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

void eliminate(Row& target, const Row& pivot_row, std::size_t col, unsigned p)
{
    const std::uint64_t f = target[col];
    if (f == 0)
        return;
    const std::uint64_t neg = p - f;
    for (std::size_t c = col; c < target.size(); ++c)
        if (pivot_row[c] != 0)
            target[c] = static_cast<std::uint32_t>((target[c] + neg * pivot_row[c]) % p);
}

} // namespace

std::vector<Row> row_basis_mod_p(std::vector<Row> rows, unsigned p, Exec exec)
{
    if (rows.empty())
        return rows;
    const std::size_t ncols = rows.front().size();
    for (const Row& r : rows)
        if (r.size() != ncols)
            throw Error("row_basis_mod_p: ragged rows");
    const long nrows = static_cast<long>(rows.size());
    long rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        long pivot = -1;
        for (long r = rank; r < nrows; ++r)
            if (rows[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[rank], rows[pivot]);
        Row& pr = rows[rank];
        const std::uint64_t scale = inverse_mod(pr[col] % p, p);
        for (std::size_t c = col; c < ncols; ++c)
            pr[c] = static_cast<std::uint32_t>(pr[c] % p * scale % p);
        if (exec == Exec::serial) {
            for (long r = rank + 1; r < nrows; ++r)
                eliminate(rows[r], pr, col, p);
        } else {
#pragma omp parallel for schedule(static)
            for (long r = rank + 1; r < nrows; ++r)
                eliminate(rows[r], pr, col, p);
        }
        ++rank;
    }
    rows.resize(static_cast<std::size_t>(rank));
    return rows;
}

std::size_t rank_mod_p(std::vector<Row> rows, unsigned p, Exec exec)
{
    return row_basis_mod_p(std::move(rows), p, exec).size();
}

} // namespace zass
