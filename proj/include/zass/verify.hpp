#pragma once

// Property suites shared by the test binaries and `zass verify`.

#include <cstddef>
#include <string>
#include <vector>

#include "zass/group_spec.hpp"
#include "zass/series.hpp"

namespace zass {

struct CheckResult {
    std::string name;
    bool pass = true;
    /// First counterexample when the check fails.
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    void merge(SuiteReport other);
    const CheckResult* first_failure() const;
};

/// Built-in group families that are valid at prime p.
std::vector<GroupSpec> builtin_specs(unsigned p);

/// Power sums of the roots of 1 - q_1 t - ... - q_k t^k by Newton's
/// identities: s_n = sum_{j<n} q_j s_{n-j} + n q_n.
std::vector<Integer> newton_power_sums(const std::vector<Integer>& q, unsigned max_n);

/// Product-identity round trip, integrality, and the w/c bookkeeping
/// (c_n = w_n when gcd(n,p) = 1, c_n - c_{n/p} = w_n otherwise) on every
/// built-in spec.
SuiteReport run_roundtrip_suite(unsigned p, std::size_t order);

/// Closed forms against the generic pipeline.
SuiteReport run_closedforms_suite(unsigned p, std::size_t order);

/// Brute-force finite-group checks. `large` adds U_6(F_2).
SuiteReport run_finite_suite(bool large = false);

} // namespace zass
