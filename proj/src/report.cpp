#include "zass/report.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include "zass/error.hpp"

namespace zass {

OutputFormat parse_format(std::string_view name)
{
    if (name == "table")
        return OutputFormat::table;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw Error("unknown output format '" + std::string(name) + "'");
}

namespace {

std::string fraction(const Rational& q)
{
    Rational r = q;
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool nb_integral(const Rational& b, std::size_t n)
{
    Rational nb = b * Rational(static_cast<unsigned long>(n));
    nb.canonicalize();
    return nb.get_den() == 1;
}

} // namespace

nlohmann::json dims_to_json(const DimensionTable& t, const std::string& spec)
{
    nlohmann::json j;
    j["spec"] = spec;
    j["p"] = t.p;
    j["N"] = t.order;
    auto& a = j["a"] = nlohmann::json::array();
    for (const Integer& x : t.a)
        a.push_back(x.get_str());
    auto& b = j["b"] = nlohmann::json::array();
    for (const Rational& x : t.b)
        b.push_back(fraction(x));
    auto& w = j["w"] = nlohmann::json::array();
    for (const Integer& x : t.w)
        w.push_back(x.get_str());
    auto& c = j["c"] = nlohmann::json::array();
    auto& g = j["galois_exponents"] = nlohmann::json::array();
    Integer running = 0;
    for (const Integer& x : t.c) {
        c.push_back(x.get_str());
        running += x;
        g.push_back(running.get_str());
    }
    return j;
}

std::string render_dims(const DimensionTable& t, const std::string& spec, OutputFormat fmt)
{
    if (fmt == OutputFormat::json)
        return dims_to_json(t, spec).dump(2) + "\n";

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"n", "a", "b", "w", "c", "galois_exponent", "nb_integral"});
    Integer running = 0;
    for (std::size_t n = 1; n <= t.c.size(); ++n) {
        running += t.c_at(n);
        rows.push_back({std::to_string(n), t.a[n].get_str(), rational_to_string(t.b_at(n)), t.w_at(n).get_str(),
                        t.c_at(n).get_str(), running.get_str(), nb_integral(t.b_at(n), n) ? "yes" : "no"});
    }
    std::ostringstream os;
    if (fmt == OutputFormat::csv) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << row[i];
            os << '\n';
        }
        return os.str();
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    os << "# " << spec << "  p = " << t.p << "  N = " << t.order << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << row[i];
        os << '\n';
    }
    return os.str();
}

std::string render_series(const TruncSeries& s, const std::string& spec, unsigned p, const SeriesRecipe* recipe,
                          OutputFormat fmt)
{
    std::ostringstream os;
    if (fmt == OutputFormat::json) {
        nlohmann::json j;
        j["spec"] = spec;
        j["p"] = p;
        j["N"] = s.order();
        auto& c = j["coefficients"] = nlohmann::json::array();
        for (const Rational& q : s.coeffs())
            c.push_back(rational_to_string(q));
        if (recipe) {
            if (recipe->has_closed_form()) {
                j["closed_form"] = {{"num", recipe->rational_function().num().to_string()},
                                    {"den", recipe->rational_function().den().to_string()}};
            } else {
                j["closed_form"] = nullptr;
            }
        }
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        os << "n,coefficient\n";
        for (std::size_t n = 0; n <= s.order(); ++n)
            os << n << ',' << rational_to_string(s[n]) << '\n';
        return os.str();
    }
    os << "# " << spec << "  p = " << p << "  N = " << s.order() << '\n';
    os << "P(t) =";
    for (const Rational& q : s.coeffs())
        os << ' ' << rational_to_string(q);
    os << '\n';
    if (recipe) {
        if (recipe->has_closed_form())
            os << "closed form: " << recipe->rational_function().to_string() << '\n';
        else
            os << "closed form: none (infinite product form)\n";
    }
    return os.str();
}

std::string render_basis(const HallSet& hall, const std::vector<BasisElement>& basis, unsigned d, unsigned p,
                         unsigned n, OutputFormat fmt)
{
    std::ostringstream os;
    if (fmt == OutputFormat::json) {
        nlohmann::json j;
        j["d"] = d;
        j["p"] = p;
        j["n"] = n;
        auto& e = j["elements"] = nlohmann::json::array();
        for (const BasisElement& b : basis)
            e.push_back({{"commutator", hall.render(b.commutator)},
                         {"weight", hall.at(b.commutator).weight},
                         {"p_exponent", b.p_exponent}});
        j["count"] = basis.size();
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        os << "commutator,weight,p_exponent\n";
        for (const BasisElement& b : basis)
            os << '"' << hall.render(b.commutator) << "\"," << hall.at(b.commutator).weight << ','
               << b.p_exponent << '\n';
        return os.str();
    }
    for (const BasisElement& b : basis)
        os << render_basis_element(hall, b, p) << '\n';
    os << "count = " << basis.size() << '\n';
    return os.str();
}

} // namespace zass
