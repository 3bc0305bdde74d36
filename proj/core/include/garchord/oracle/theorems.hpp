#pragma once

#include "garchord/distribution.hpp"
#include "garchord/orders.hpp"
#include "garchord/params.hpp"
#include "garchord/recursion.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace garchord::oracle {

/// Propagation results checked by exact enumeration.
enum class TheoremId {
    sigma_st,      // |e_k| <=st |e~_k|  =>  sigma_{n+1} <=st          (m1)
    sigma_icx,     // |e_k| <=icx |e~_k| =>  sigma_{n+1} <=icx         (m1)
    sigma2_st,     // e_k^2 <=st e~_k^2  =>  sigma^2_{n+1} <=st        (m2)
    sigma2_icx,    // e_k^2 <=icx e~_k^2 =>  sigma^2_{n+1} <=icx       (m2)
    x_abs_st,      // |e_k| <=st |e~_k|  =>  |X_n| <=st                (m1)
    x_abs_icx,     // |e_k| <=icx |e~_k| =>  |X_n| <=icx               (m1)
    x_sq_st,       // e_k^2 <=st e~_k^2  =>  X_n^2 <=st                (m2)
    x_sq_icx,      // e_k^2 <=icx e~_k^2 =>  X_n^2 <=icx               (m2)
    propconv,      // e_k <=cx e~_k      =>  X_n <=cx                  (m1)
    sums_cx,       // symmetric, e_k <=cx e~_k => S_n <=cx             (m1)
    multivariate,  // symmetric, e_k <=cx e~_k => supermodular-convex order of (X_0..X_n)
    params_prop,   // GARCH(1,1), params <=st  => |X_n|, X_n^2 <=st and X_n <=cx
    params_sums,   // GARCH(1,1), symmetric, params <=st => S_n <=cx
};

std::span<const TheoremId> all_theorems() noexcept;
std::string_view theorem_key(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem_key(std::string_view key) noexcept;
std::string_view theorem_statement(TheoremId id) noexcept;

/// Independent finite laws for the three GARCH(1,1) coefficients.
struct ParamLaw {
    DiscreteDist alpha0;
    DiscreteDist alpha1;
    DiscreteDist beta1;

    static ParamLaw fixed(const GarchParams& p);
};

struct Scenario {
    std::string name;
    RecursionKind kind = RecursionKind::m1;
    std::string recursion = "garch11";
    ParamLaw params = ParamLaw::fixed(GarchParams(0.1, 0.3, 0.5));
    /// Parameter theorems compare `params` against this law.
    std::optional<ParamLaw> perturbed_params;
    /// Initial state in recursion coordinates (sigma_0 for m1, sigma_0^2 for m2).
    DiscreteDist initial_state = DiscreteDist::point_mass(1.0);
    DiscreteDist innovation = DiscreteDist::symmetric_two_point(1.0);
    std::optional<DiscreteDist> perturbed_innovation;
    /// Steps whose innovation law is replaced; more than one index is a
    /// chained perturbation (follows by transitivity, reported as derived).
    std::vector<std::size_t> perturbed_indices;
    std::size_t n = 3;
};

struct PremiseCheck {
    std::string name;
    bool holds = false;
    std::string detail;
    std::optional<OrderVerdict> verdict;
};

struct TheoremReport {
    TheoremId theorem;
    Scenario scenario;
    std::vector<PremiseCheck> premises;
    bool premises_hold = false;
    /// Absent when a premise failed.
    std::optional<OrderVerdict> conclusion;
    std::vector<OrderVerdict> additional_conclusions;
    /// Worst slack of "unperturbed below perturbed" over all conclusions.
    double slack = 0.0;
    bool derived = false;
    bool passed = false;
};

/// Exact tolerance for premise and conclusion checks.
inline constexpr double kExactTolerance = 1e-12;

TheoremReport verify_theorem(TheoremId id, const Scenario& scenario);

/// Bundled scenarios (at least three per theorem; 2- and 3-point symmetric
/// innovations, n <= 8).
std::vector<Scenario> bundled_scenarios(TheoremId id);

/// Parses `{"schema": 1, "scenarios": [...]}`; unknown keys are errors.
std::vector<Scenario> parse_scenarios(std::string_view json_text);

/// {theorem, scenario, premises, conclusion, exact: true, ...}
std::string report_json(const TheoremReport& report, int indent = 2);
/// {schema: 1, passed, count, failures, reports: [...]}
std::string reports_json(std::span<const TheoremReport> reports, int indent = 2);

}  // namespace garchord::oracle
