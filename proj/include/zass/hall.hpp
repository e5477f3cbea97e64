#pragma once

// Hall commutators over generators x1..xd and the F_p-basis of S_(n)/S_(n+1)
// for a free pro-p group S built from them.

#include <cstddef>
#include <string>
#include <vector>

namespace zass {

/// Node of a Hall commutator. Generators have generator >= 1 and no
/// children; brackets reference their components by index into the owning
/// HallSet.
struct HallCommutator {
    unsigned generator = 0;
    std::size_t left = 0;
    std::size_t right = 0;
    unsigned weight = 1;

    bool is_generator() const { return generator != 0; }
};

/// All Hall commutators of weight <= max_weight on d generators.
///
/// Commutators are stored in increasing order: index order is the total
/// order (x1 > ... > xd, heavier above lighter, lexicographic within a
/// weight).
class HallSet {
public:
    HallSet(unsigned d, unsigned max_weight);

    unsigned rank() const { return d_; }
    unsigned max_weight() const { return static_cast<unsigned>(by_weight_.size()); }

    const HallCommutator& at(std::size_t id) const { return nodes_.at(id); }
    std::size_t size() const { return nodes_.size(); }

    /// Indices of C_weight in increasing order.
    const std::vector<std::size_t>& of_weight(unsigned weight) const;

    bool less(std::size_t a, std::size_t b) const { return a < b; }

    /// Nested-bracket text, e.g. "[[x1,x2],x2]".
    std::string render(std::size_t id) const;

private:
    unsigned d_;
    std::vector<HallCommutator> nodes_;
    std::vector<std::vector<std::size_t>> by_weight_;
};

/// Class of commutator^{p^p_exponent} in S_(n)/S_(n+1).
struct BasisElement {
    std::size_t commutator;
    unsigned p_exponent;
};

/// For n = p^k m with gcd(m, p) = 1: C_m^{p^k}, C_{pm}^{p^{k-1}}, ..., C_n,
/// each weight block listed from the largest commutator down.
std::vector<BasisElement> zassenhaus_basis(const HallSet& hall, unsigned p, unsigned n);

/// Convenience overload that builds the HallSet it needs.
struct ZassenhausBasis {
    HallSet hall;
    std::vector<BasisElement> elements;
};
ZassenhausBasis zassenhaus_basis(unsigned d, unsigned p, unsigned n);

/// "<commutator> ^ p^<j>", e.g. "[x1,x2] ^ 2^0".
std::string render_basis_element(const HallSet& hall, const BasisElement& e, unsigned p);

} // namespace zass
