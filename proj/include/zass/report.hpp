#pragma once

// Rendering of dimension tables, series and bases for the CLI.
//
// JSON dimension tables have the keys
//   spec, p, N, a, b, w, c, galois_exponents
// where integers are decimal strings and b_n are "num/den" strings, so no
// precision is lost. galois_exponents[i] = c_1 + ... + c_{i+1}.

#include <string>
#include <string_view>

#include <json.hpp>

#include "zass/dimensions.hpp"
#include "zass/hall.hpp"

namespace zass {

enum class OutputFormat { table, csv, json };

OutputFormat parse_format(std::string_view name);

nlohmann::json dims_to_json(const DimensionTable& t, const std::string& spec);
std::string render_dims(const DimensionTable& t, const std::string& spec, OutputFormat fmt);

std::string render_series(const TruncSeries& s, const std::string& spec, unsigned p, const SeriesRecipe* recipe,
                          OutputFormat fmt);

std::string render_basis(const HallSet& hall, const std::vector<BasisElement>& basis, unsigned d, unsigned p,
                         unsigned n, OutputFormat fmt);

} // namespace zass
