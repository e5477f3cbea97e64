#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zass/finite_group.hpp"
#include "zass/kernels.hpp"

using namespace zass;

TEST_CASE("row basis over F_p")
{
    const std::vector<Row> rows{{1, 2, 0}, {2, 4, 0}, {0, 1, 1}};
    CHECK(rank_mod_p(rows, 5, Exec::serial) == 2);
    CHECK(rank_mod_p(rows, 2, Exec::serial) == 2);
    CHECK(rank_mod_p({}, 3, Exec::serial) == 0);
    CHECK(rank_mod_p({{0, 0}, {0, 0}}, 3, Exec::serial) == 0);

    const auto basis = row_basis_mod_p(rows, 5, Exec::serial);
    REQUIRE(basis.size() == 2);
    for (const Row& r : basis) {
        std::size_t lead = 0;
        while (lead < r.size() && r[lead] == 0)
            ++lead;
        REQUIRE(lead < r.size());
        CHECK(r[lead] == 1);
    }
}

TEST_CASE("serial and parallel ranks agree on random matrices")
{
    std::mt19937 rng(7);
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Row> rows(60, Row(50));
            for (auto& r : rows)
                for (auto& x : r)
                    x = entry(rng);
            // Force some dependencies.
            for (std::size_t i = 40; i < 60; ++i)
                for (std::size_t j = 0; j < 50; ++j)
                    rows[i][j] = (rows[i - 40][j] + rows[i - 39][j]) % p;
            CHECK(rank_mod_p(rows, p, Exec::serial) == rank_mod_p(rows, p, Exec::parallel));
            CHECK(row_basis_mod_p(rows, p, Exec::serial) == row_basis_mod_p(rows, p, Exec::parallel));
        }
    }
}

TEST_CASE("commutator and power marks agree")
{
    const FiniteGroup g = unitriangular_group(4, 2);
    const Subset all = g.all();
    std::vector<std::uint8_t> a(g.order(), 0), b(g.order(), 0);
    mark_commutators(g, all, all, a, Exec::serial);
    mark_commutators(g, all, all, b, Exec::parallel);
    CHECK(a == b);
    mark_powers(g, all, 2, a, Exec::serial);
    mark_powers(g, all, 2, b, Exec::parallel);
    CHECK(a == b);
}

TEST_CASE("filtrations and augmentation dims agree across execution modes")
{
    for (const FiniteGroup& g : {unitriangular_group(4, 2), unitriangular_group(3, 3), unitriangular_group(5, 2)}) {
        const auto s = zassenhaus_filtration_finite(g, 0, Exec::serial);
        const auto p = zassenhaus_filtration_finite(g, 0, Exec::parallel);
        CHECK(s.dims == p.dims);
        CHECK(s.subgroups == p.subgroups);
    }
    const FiniteGroup u = unitriangular_group(4, 2);
    CHECK(group_algebra_aug_dims(u, 10, Exec::serial) == group_algebra_aug_dims(u, 10, Exec::parallel));
}
