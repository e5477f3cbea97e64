#pragma once

// Explicit finite p-groups as groups of unitriangular matrices over F_p, and
// brute-force Zassenhaus filtrations / augmentation-ideal dimensions on them.

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "zass/kernels.hpp"

namespace zass {

/// Row-major m x m matrix with entries in 0..p-1.
using Matrix = std::vector<std::uint8_t>;

/// Sorted element indices of a subset of a FiniteGroup.
using Subset = std::vector<std::uint32_t>;

/// Default element cap; the ZASS_MAX_ELEMENTS environment variable overrides it.
inline constexpr std::size_t kDefaultElementCap = std::size_t{1} << 20;

std::size_t element_cap();

/// Multiplication tables are cached up to this order.
inline constexpr std::size_t kTableCap = 4096;

class FiniteGroup {
public:
    /// Closure of `gens` (all m x m unitriangular over F_p) under products.
    /// Throws TooLarge once more than `cap` elements appear.
    static FiniteGroup generated_by(unsigned m, unsigned p, const std::vector<Matrix>& gens,
                                    std::size_t cap = element_cap());

    unsigned dim() const { return m_; }
    unsigned prime() const { return p_; }
    std::size_t order() const { return elements_.size(); }
    std::uint32_t identity() const { return 0; }

    const Matrix& element(std::uint32_t i) const { return elements_[i]; }
    /// Index of `x`; throws Error when x is not an element.
    std::uint32_t index_of(const Matrix& x) const;
    bool contains(const Matrix& x) const { return index_.count(x) != 0; }

    /// Indices of the generating set the group was built from.
    const std::vector<std::uint32_t>& generators() const { return generators_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t pow(std::uint32_t a, unsigned long e) const;
    /// [a, b] = a^{-1} b^{-1} a b.
    std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const;

    Subset all() const;

private:
    FiniteGroup(unsigned m, unsigned p) : m_(m), p_(p) {}

    Matrix multiply(const Matrix& a, const Matrix& b) const;

    unsigned m_;
    unsigned p_;
    std::vector<Matrix> elements_;
    std::unordered_map<Matrix, std::uint32_t, MatrixHash> index_;
    std::vector<std::uint32_t> generators_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::uint32_t> table_;
};

Matrix identity_matrix(unsigned m);
/// Identity plus `value` at (row, col).
Matrix elementary_matrix(unsigned m, unsigned row, unsigned col, unsigned value = 1);

/// U_m(F_p). Throws TooLarge when p^{m(m-1)/2} exceeds the cap.
FiniteGroup unitriangular_group(unsigned m, unsigned p, std::size_t cap = element_cap());

/// C_p realized as U_2(F_p).
FiniteGroup cyclic_p_group(unsigned p);

/// Block-diagonal embedding of G x H.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap = element_cap());

/// The subgroup of `g` generated by the given elements, as a group in its own right.
FiniteGroup subgroup_group(const FiniteGroup& g, std::span<const std::uint32_t> gens);

/// Smallest subgroup containing `gens`.
Subset subgroup_closure(const FiniteGroup& g, std::span<const std::uint32_t> gens);

bool is_subset(const Subset& a, const Subset& b);
bool is_normal(const FiniteGroup& g, const Subset& h);

struct FiltrationResult {
    /// subgroups[n-1] is G_(n), for n = 1..depth+1.
    std::vector<Subset> subgroups;
    /// dims[n-1] = log_p [G_(n) : G_(n+1)], for n = 1..depth.
    std::vector<unsigned> dims;

    const Subset& at(std::size_t n) const { return subgroups.at(n - 1); }
};

/// G_(1) = G, G_(n) = < x^p : x in G_(ceil(n/p)) ; [x,y] : x in G_(i), y in G_(j), i+j=n >,
/// computed over every pair (i, j) literally. A depth of 0 runs until the
/// chain reaches the trivial group.
FiltrationResult zassenhaus_filtration_finite(const FiniteGroup& g, std::size_t depth = 0,
                                              Exec exec = Exec::parallel);

/// Largest group order accepted by group_algebra_aug_dims.
inline constexpr std::size_t kAlgebraCap = 4096;

/// a_n = dim I^n / I^{n+1} for the augmentation ideal I of F_p[G], n = 0..depth.
std::vector<unsigned long> group_algebra_aug_dims(const FiniteGroup& g, std::size_t depth,
                                                  Exec exec = Exec::parallel);

/// Same, but multiplying by (h - 1) for every h in G instead of a generating
/// set. Quadratically slower; used to cross-check.
std::vector<unsigned long> group_algebra_aug_dims_all_elements(const FiniteGroup& g, std::size_t depth);

/// Coefficients of prod_n ((1 - t^{np}) / (1 - t^n))^{c_n} as a polynomial,
/// for a finite filtration with dimensions `c` (c[0] = c_1).
std::vector<long long> jennings_polynomial(std::span<const unsigned> c, unsigned p);

} // namespace zass
