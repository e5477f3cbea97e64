// Serial vs OpenMP timings for the finite-oracle kernels.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "zass/finite_group.hpp"
#include "zass/kernels.hpp"

namespace {

double seconds(const std::function<void()>& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void compare(const char* name, const std::function<void(zass::Exec)>& run)
{
    const double s = seconds([&] { run(zass::Exec::serial); });
    const double p = seconds([&] { run(zass::Exec::parallel); });
    std::printf("%-34s serial %8.3fs  parallel %8.3fs  speedup %5.2fx\n", name, s, p, s / p);
}

} // namespace

int main()
{
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());

    const zass::FiniteGroup u5 = zass::unitriangular_group(5, 2);
    compare("filtration U_5(F_2)", [&](zass::Exec e) { zass::zassenhaus_filtration_finite(u5, 0, e); });

    const zass::FiniteGroup u43 = zass::unitriangular_group(4, 3);
    compare("filtration U_4(F_3)", [&](zass::Exec e) { zass::zassenhaus_filtration_finite(u43, 0, e); });

    const zass::FiniteGroup u4 = zass::unitriangular_group(4, 2);
    compare("augmentation dims U_4(F_2)", [&](zass::Exec e) { zass::group_algebra_aug_dims(u4, 12, e); });

    const zass::FiniteGroup u33 = zass::unitriangular_group(3, 3);
    const zass::FiniteGroup prod = zass::direct_product(u33, u33);
    compare("augmentation dims U_3(F_3)^2", [&](zass::Exec e) { zass::group_algebra_aug_dims(prod, 16, e); });

    std::vector<zass::Row> rows(768, zass::Row(768));
    std::uint32_t state = 12345;
    for (auto& r : rows)
        for (auto& x : r) {
            state = state * 1103515245u + 12345u;
            x = (state >> 16) % 3;
        }
    compare("rank mod 3, 768 x 768", [&](zass::Exec e) { zass::rank_mod_p(rows, 3, e); });
    return 0;
}
