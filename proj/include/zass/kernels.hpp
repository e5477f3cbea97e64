#pragma once

// Data-parallel inner loops of the finite oracle. Each kernel has a serial
// reference path and an OpenMP path selected by Exec; both must produce
// identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zass {

class FiniteGroup;

enum class Exec { serial, parallel };

struct MatrixHash {
    std::size_t operator()(const std::vector<std::uint8_t>& m) const noexcept;
};

/// marks[[a, b]] = 1 for every a in `lhs`, b in `rhs`.
void mark_commutators(const FiniteGroup& g, std::span<const std::uint32_t> lhs,
                      std::span<const std::uint32_t> rhs, std::vector<std::uint8_t>& marks, Exec exec);

/// marks[x^p] = 1 for every x in `xs`.
void mark_powers(const FiniteGroup& g, std::span<const std::uint32_t> xs, unsigned long exponent,
                 std::vector<std::uint8_t>& marks, Exec exec);

/// Dense vector over F_p.
using Row = std::vector<std::uint32_t>;

/// Row-echelon basis of the span of `rows` over F_p. Each returned row has a
/// leading 1 in a column where all later rows are zero.
std::vector<Row> row_basis_mod_p(std::vector<Row> rows, unsigned p, Exec exec);

std::size_t rank_mod_p(std::vector<Row> rows, unsigned p, Exec exec);

} // namespace zass
