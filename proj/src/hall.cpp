#include "zass/hall.hpp"

#include <algorithm>
#include <utility>

#include "zass/error.hpp"

namespace zass {

HallSet::HallSet(unsigned d, unsigned max_weight) : d_(d), by_weight_(max_weight)
{
    if (max_weight == 0)
        return;
    // x_d is the smallest generator.
    for (unsigned g = d; g >= 1; --g) {
        by_weight_[0].push_back(nodes_.size());
        nodes_.push_back(HallCommutator{g, 0, 0, 1});
    }
    for (unsigned n = 2; n <= max_weight; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (unsigned n2 = 1; 2 * n2 <= n; ++n2) {
            const unsigned n1 = n - n2;
            for (std::size_t c1 : by_weight_[n1 - 1]) {
                const HallCommutator& h1 = nodes_[c1];
                for (std::size_t c2 : by_weight_[n2 - 1]) {
                    if (!(c1 > c2))
                        continue;
                    if (!h1.is_generator() && c2 < h1.right)
                        continue;
                    pairs.emplace_back(c1, c2);
                }
            }
        }
        std::sort(pairs.begin(), pairs.end());
        auto& bucket = by_weight_[n - 1];
        bucket.reserve(pairs.size());
        for (const auto& [c1, c2] : pairs) {
            bucket.push_back(nodes_.size());
            nodes_.push_back(HallCommutator{0, c1, c2, n});
        }
    }
}

const std::vector<std::size_t>& HallSet::of_weight(unsigned weight) const
{
    if (weight == 0 || weight > by_weight_.size())
        throw OutOfRange("weight " + std::to_string(weight) + " outside 1.." +
                         std::to_string(by_weight_.size()));
    return by_weight_[weight - 1];
}

std::string HallSet::render(std::size_t id) const
{
    const HallCommutator& h = nodes_.at(id);
    if (h.is_generator())
        return "x" + std::to_string(h.generator);
    return "[" + render(h.left) + "," + render(h.right) + "]";
}

std::vector<BasisElement> zassenhaus_basis(const HallSet& hall, unsigned p, unsigned n)
{
    if (n == 0)
        throw OutOfRange("degree must be at least 1");
    if (n > hall.max_weight())
        throw OutOfRange("HallSet only reaches weight " + std::to_string(hall.max_weight()));
    unsigned k = 0, m = n;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    std::vector<BasisElement> out;
    unsigned weight = m;
    for (unsigned i = 0; i <= k; ++i, weight *= p) {
        const auto& block = hall.of_weight(weight);
        for (auto it = block.rbegin(); it != block.rend(); ++it)
            out.push_back(BasisElement{*it, k - i});
    }
    return out;
}

ZassenhausBasis zassenhaus_basis(unsigned d, unsigned p, unsigned n)
{
    ZassenhausBasis zb{HallSet(d, n), {}};
    zb.elements = zassenhaus_basis(zb.hall, p, n);
    return zb;
}

std::string render_basis_element(const HallSet& hall, const BasisElement& e, unsigned p)
{
    return hall.render(e.commutator) + " ^ " + std::to_string(p) + "^" + std::to_string(e.p_exponent);
}

} // namespace zass
