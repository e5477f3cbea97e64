#include "zass/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "zass/dimensions.hpp"
#include "zass/error.hpp"
#include "zass/group_spec.hpp"
#include "zass/hall.hpp"
#include "zass/report.hpp"
#include "zass/verify.hpp"

namespace zass {

namespace {

constexpr const char* kGrammarHelp =
    "Group expressions: free(d), cyclic(p), demushkin(d), superpyth(d), zp(d),\n"
    "combined with '*' (free pro-p product) and 'x' (direct product).\n"
    "'x' binds tighter than '*'; both are left-associative; parentheses group.\n"
    "cyclic(q) requires q = --prime; superpyth requires --prime 2.";

struct Options {
    std::string spec;
    unsigned prime = 2;
    std::size_t max_n = 16;
    std::string format = "table";
    bool closed = false;
    unsigned rank = 0;
    unsigned degree = 1;
    std::string suite = "all";
    bool large = false;
};

int report_suite(const SuiteReport& report, const std::string& suite, std::ostream& out)
{
    for (const CheckResult& c : report.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << suite << ": " << c.name;
        if (!c.pass)
            out << "\n      first counterexample: " << c.detail;
        out << '\n';
    }
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_dims(const Options& o, std::ostream& out)
{
    const GroupSpec spec = parse_group_spec(o.spec);
    validate(spec, o.prime);
    const DimensionTable t = dims_table(spec, o.prime, o.max_n);
    out << render_dims(t, spec.to_string(), parse_format(o.format));
    return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out)
{
    const GroupSpec spec = parse_group_spec(o.spec);
    validate(spec, o.prime);
    const TruncSeries s = hp_series(spec, o.prime, o.max_n);
    if (o.closed) {
        const SeriesRecipe recipe = closed_form(spec, o.prime);
        out << render_series(s, spec.to_string(), o.prime, &recipe, parse_format(o.format));
    } else {
        out << render_series(s, spec.to_string(), o.prime, nullptr, parse_format(o.format));
    }
    return kExitOk;
}

int cmd_basis(const Options& o, std::ostream& out)
{
    if (!is_prime(o.prime))
        throw PrimeMismatch(std::to_string(o.prime) + " is not a prime");
    if (o.rank < 1)
        throw RankOutOfRange("basis needs rank d >= 1");
    const ZassenhausBasis zb = zassenhaus_basis(o.rank, o.prime, o.degree);
    out << render_basis(zb.hall, zb.elements, o.rank, o.prime, o.degree, parse_format(o.format));
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    if (!is_prime(o.prime))
        throw PrimeMismatch(std::to_string(o.prime) + " is not a prime");
    int code = kExitOk;
    const bool all = o.suite == "all";
    if (all || o.suite == "roundtrip")
        code = std::max(code, report_suite(run_roundtrip_suite(o.prime, o.max_n), "roundtrip", out));
    if (all || o.suite == "closedforms")
        code = std::max(code, report_suite(run_closedforms_suite(o.prime, o.max_n), "closedforms", out));
    if (all || o.suite == "finite")
        code = std::max(code, report_suite(run_finite_suite(o.large), "finite", out));
    out << (code == kExitOk ? "PASS" : "FAIL") << '\n';
    return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Filtration dimension tables for pro-p group expressions", "zass"};
    app.footer(kGrammarHelp);
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--prime,-p", o.prime, "working prime")->capture_default_str();
        sub->add_option("--max-n,-N", o.max_n, "truncation order")
            ->capture_default_str()
            ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
        sub->add_option("--format,-f", o.format, "output format")
            ->capture_default_str()
            ->check(CLI::IsMember({"table", "csv", "json"}));
    };

    CLI::App* dims = app.add_subcommand("dims", "print n, a_n, b_n, w_n, c_n and c_1+...+c_n");
    dims->add_option("spec", o.spec, "group expression")->required();
    add_common(dims);

    CLI::App* series = app.add_subcommand("series", "print the Hilbert-Poincare series");
    series->add_option("spec", o.spec, "group expression")->required();
    add_common(series);
    series->add_flag("--closed-form", o.closed, "also print the rational closed form");

    CLI::App* basis = app.add_subcommand("basis", "list a basis of S_(n)/S_(n+1) for the free group of rank d");
    basis->add_option("d", o.rank, "rank of the free group")->required();
    basis->add_option("--prime,-p", o.prime, "working prime")->capture_default_str();
    basis->add_option("--degree,-n", o.degree, "filtration degree n")
        ->capture_default_str()
        ->check(CLI::Range(1u, 64u));
    basis->add_option("--format,-f", o.format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "csv", "json"}));

    CLI::App* verify = app.add_subcommand("verify", "run the built-in property suites");
    verify->add_option("--suite", o.suite, "suite to run")
        ->capture_default_str()
        ->check(CLI::IsMember({"roundtrip", "closedforms", "finite", "all"}));
    verify->add_option("--prime,-p", o.prime, "working prime")->capture_default_str();
    verify->add_option("--max-n,-N", o.max_n, "truncation order")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
    verify->add_flag("--large", o.large, "include U_6(F_2) in the finite suite (slow)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    // Output is rendered into a buffer so that errors never leave a partial table.
    std::ostringstream buffer;
    int code = kExitOk;
    try {
        if (*dims)
            code = cmd_dims(o, buffer);
        else if (*series)
            code = cmd_series(o, buffer);
        else if (*basis)
            code = cmd_basis(o, buffer);
        else
            code = cmd_verify(o, buffer);
    } catch (const SyntaxError& e) {
        err << "zass: " << e.what() << '\n';
        return kExitParse;
    } catch (const ArityError& e) {
        err << "zass: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        err << "zass: invalid group: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IntegralityError& e) {
        err << "zass: integrality failure: " << e.what() << '\n';
        return kExitIntegrality;
    } catch (const Error& e) {
        err << "zass: " << e.what() << '\n';
        return kExitParse;
    }
    out << buffer.str();
    return code;
}

} // namespace zass
