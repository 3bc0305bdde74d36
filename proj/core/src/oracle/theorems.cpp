#include "garchord/oracle/theorems.hpp"

#include "detail/json_convert.hpp"
#include "garchord/oracle/path_tree.hpp"
#include "garchord/test_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace garchord::oracle {

namespace {

struct TheoremInfo {
    TheoremId id;
    std::string_view key;
    std::string_view statement;
};

constexpr std::array<TheoremInfo, 13> kTheorems{{
    {TheoremId::sigma_st, "thm-sigma-st", "m1: |e_k| <=st |e~_k| implies sigma_{n+1} <=st sigma~_{n+1}"},
    {TheoremId::sigma_icx, "thm-sigma-icx", "m1: |e_k| <=icx |e~_k| implies sigma_{n+1} <=icx sigma~_{n+1}"},
    {TheoremId::sigma2_st, "thm-sigma2-st", "m2: e_k^2 <=st e~_k^2 implies sigma^2_{n+1} <=st sigma~^2_{n+1}"},
    {TheoremId::sigma2_icx, "thm-sigma2-icx", "m2: e_k^2 <=icx e~_k^2 implies sigma^2_{n+1} <=icx sigma~^2_{n+1}"},
    {TheoremId::x_abs_st, "thm-x-abs-st", "m1: |e_k| <=st |e~_k| implies |X_n| <=st |X~_n|"},
    {TheoremId::x_abs_icx, "thm-x-abs-icx", "m1: |e_k| <=icx |e~_k| implies |X_n| <=icx |X~_n|"},
    {TheoremId::x_sq_st, "thm-x-sq-st", "m2: e_k^2 <=st e~_k^2 implies X_n^2 <=st X~_n^2"},
    {TheoremId::x_sq_icx, "thm-x-sq-icx", "m2: e_k^2 <=icx e~_k^2 implies X_n^2 <=icx X~_n^2"},
    {TheoremId::propconv, "thm-propconv", "m1: e_k <=cx e~_k implies X_n <=cx X~_n"},
    {TheoremId::sums_cx, "thm-sums-cx", "m1, symmetric innovations: e_k <=cx e~_k implies S_n <=cx S~_n"},
    {TheoremId::multivariate, "thm-multivariate",
     "m1, symmetric innovations: e_k <=cx e~_k implies E phi(X_0..X_n) <= E phi(X~_0..X~_n) for supermodular convex phi"},
    {TheoremId::params_prop, "prop-params",
     "garch11: parameters <=st implies |X_n| <=st, X_n^2 <=st and X_n <=cx"},
    {TheoremId::params_sums, "thm-params-sums",
     "garch11, symmetric innovations: parameters <=st implies S_n <=cx"},
}};

constexpr std::array<TheoremId, 13> kAll{
    TheoremId::sigma_st,  TheoremId::sigma_icx,   TheoremId::sigma2_st, TheoremId::sigma2_icx,
    TheoremId::x_abs_st,  TheoremId::x_abs_icx,   TheoremId::x_sq_st,   TheoremId::x_sq_icx,
    TheoremId::propconv,  TheoremId::sums_cx,     TheoremId::multivariate,
    TheoremId::params_prop, TheoremId::params_sums};

bool is_param_theorem(TheoremId id) {
    return id == TheoremId::params_prop || id == TheoremId::params_sums;
}

bool needs_symmetry(TheoremId id) {
    return id == TheoremId::propconv || id == TheoremId::sums_cx ||
           id == TheoremId::multivariate || id == TheoremId::params_sums;
}

std::optional<RecursionKind> required_kind(TheoremId id) {
    switch (id) {
        case TheoremId::sigma2_st:
        case TheoremId::sigma2_icx:
        case TheoremId::x_sq_st:
        case TheoremId::x_sq_icx: return RecursionKind::m2;
        case TheoremId::params_prop:
        case TheoremId::params_sums: return std::nullopt;
        default: return RecursionKind::m1;
    }
}

bool accepted(Direction d) { return d == Direction::a_below_b || d == Direction::indistinguishable; }

PremiseCheck flag(std::string name, bool holds, std::string detail = {}) {
    return PremiseCheck{std::move(name), holds, std::move(detail), std::nullopt};
}

PremiseCheck order_premise(std::string name, OrderVerdict v) {
    const bool ok = accepted(v.direction) && v.slack() >= -kExactTolerance;
    std::string detail = std::string(to_string(v.relation)) + " verdict " + to_string(v.direction);
    return PremiseCheck{std::move(name), ok, std::move(detail), std::move(v)};
}

struct WeightedTree {
    double weight;
    ExactPathTree tree;
};

std::vector<WeightedTree> trees_for(const Scenario& s, bool perturbed) {
    const ParamLaw& law = perturbed && s.perturbed_params ? *s.perturbed_params : s.params;
    std::vector<DiscreteDist> laws(s.n + 1, s.innovation);
    if (perturbed && s.perturbed_innovation) {
        for (std::size_t k : s.perturbed_indices) {
            laws.at(k) = *s.perturbed_innovation;
        }
    }
    std::vector<WeightedTree> out;
    for (const Atom& a0 : law.alpha0.atoms()) {
        for (const Atom& a1 : law.alpha1.atoms()) {
            for (const Atom& b1 : law.beta1.atoms()) {
                const GarchParams p(a0.point, a1.point, b1.point);
                out.push_back({a0.prob * a1.prob * b1.prob,
                               ExactPathTree(make_recursion(s.kind, s.recursion, p),
                                             s.initial_state, laws)});
            }
        }
    }
    return out;
}

DiscreteDist marginal(const Scenario& s, bool perturbed, Quantity q, std::size_t index) {
    std::vector<Atom> atoms;
    for (const auto& wt : trees_for(s, perturbed)) {
        wt.tree.append_marginal(q, index, wt.weight, atoms);
    }
    return DiscreteDist(std::move(atoms));
}

MultiSample joint(const Scenario& s, bool perturbed) {
    std::vector<double> rows;
    std::vector<double> weights;
    for (const auto& wt : trees_for(s, perturbed)) {
        wt.tree.append_joint_x(wt.weight, rows, weights);
    }
    return MultiSample(s.n + 1, std::move(rows), std::move(weights));
}

bool params_admissible(const ParamLaw& law, std::string& detail) {
    for (const Atom& a0 : law.alpha0.atoms()) {
        for (const Atom& a1 : law.alpha1.atoms()) {
            for (const Atom& b1 : law.beta1.atoms()) {
                try {
                    GarchParams(a0.point, a1.point, b1.point);
                } catch (const std::invalid_argument& e) {
                    detail = e.what();
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<PremiseCheck> premises_for(TheoremId id, const Scenario& s) {
    std::vector<PremiseCheck> out;
    const bool param = is_param_theorem(id);

    if (auto kind = required_kind(id)) {
        out.push_back(flag(std::string("model ") + to_string(*kind), s.kind == *kind,
                           std::string("scenario uses ") + to_string(s.kind)));
    }
    {
        std::string detail;
        bool ok = params_admissible(s.params, detail);
        if (ok && s.perturbed_params) {
            ok = params_admissible(*s.perturbed_params, detail);
        }
        out.push_back(flag("parameters positive and stationary", ok, detail));
        if (!ok) {
            return out;
        }
    }
    {
        std::string detail;
        bool ok = true;
        try {
            const double hi = std::max(1.0, 4.0 * s.initial_state.max());
            double umax = std::max(std::abs(s.innovation.min()), std::abs(s.innovation.max()));
            if (s.perturbed_innovation) {
                umax = std::max({umax, std::abs(s.perturbed_innovation->min()),
                                 std::abs(s.perturbed_innovation->max())});
            }
            umax = std::max(umax, 1.0);
            if (s.kind == RecursionKind::m2) {
                umax *= umax;
            }
            for (const auto& wt : trees_for(s, false)) {
                const ShapeCheck c = check_shape(wt.tree.recursion(), umax, 0.0, hi);
                if (!c.ok()) {
                    ok = false;
                    detail = c.detail;
                    break;
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        out.push_back(flag("recursion increasing and componentwise convex", ok, detail));
    }

    const auto zero_mean = [](const DiscreteDist& d) { return std::abs(d.mean()) <= kExactTolerance; };
    out.push_back(flag("innovation mean zero", zero_mean(s.innovation)));
    if (needs_symmetry(id)) {
        out.push_back(flag("innovation symmetric", s.innovation.is_symmetric()));
    }

    if (param) {
        out.push_back(flag("garch11 recursion", s.recursion == "garch11",
                           "scenario uses " + s.recursion));
        out.push_back(flag("perturbed parameters given", s.perturbed_params.has_value()));
        out.push_back(flag("innovation law unchanged", !s.perturbed_innovation.has_value()));
        if (s.perturbed_params) {
            const ParamLaw& lo = s.params;
            const ParamLaw& hi = *s.perturbed_params;
            out.push_back(order_premise("alpha0 <=st alpha0~", check_st(lo.alpha0, hi.alpha0, {}, kExactTolerance)));
            out.push_back(order_premise("alpha1 <=st alpha1~", check_st(lo.alpha1, hi.alpha1, {}, kExactTolerance)));
            out.push_back(order_premise("beta1 <=st beta1~", check_st(lo.beta1, hi.beta1, {}, kExactTolerance)));
        }
        return out;
    }

    const bool have_law = s.perturbed_innovation.has_value();
    out.push_back(flag("perturbed innovation given", have_law));
    const bool indices_ok =
        !s.perturbed_indices.empty() &&
        std::all_of(s.perturbed_indices.begin(), s.perturbed_indices.end(),
                    [&](std::size_t k) { return k <= s.n; });
    out.push_back(flag("perturbed steps within 0..n", indices_ok));
    if (!have_law) {
        return out;
    }
    const DiscreteDist& e = s.innovation;
    const DiscreteDist& et = *s.perturbed_innovation;
    out.push_back(flag("perturbed innovation mean zero", zero_mean(et)));
    if (needs_symmetry(id)) {
        out.push_back(flag("perturbed innovation symmetric", et.is_symmetric()));
    }
    switch (id) {
        case TheoremId::sigma_st:
        case TheoremId::x_abs_st:
            out.push_back(order_premise("|e_k| <=st |e~_k|", check_st(e.abs(), et.abs(), {}, kExactTolerance)));
            break;
        case TheoremId::sigma_icx:
        case TheoremId::x_abs_icx:
            out.push_back(order_premise("|e_k| <=icx |e~_k|", check_icx(e.abs(), et.abs(), {}, kExactTolerance)));
            break;
        case TheoremId::sigma2_st:
        case TheoremId::x_sq_st:
            out.push_back(order_premise("e_k^2 <=st e~_k^2", check_st(e.square(), et.square(), {}, kExactTolerance)));
            break;
        case TheoremId::sigma2_icx:
        case TheoremId::x_sq_icx:
            out.push_back(order_premise("e_k^2 <=icx e~_k^2", check_icx(e.square(), et.square(), {}, kExactTolerance)));
            break;
        default:
            out.push_back(order_premise("e_k <=cx e~_k", check_cx(e, et, kExactTolerance, {}, kExactTolerance)));
            break;
    }
    return out;
}

OrderVerdict exact_check(Relation r, const DiscreteDist& a, const DiscreteDist& b) {
    switch (r) {
        case Relation::st: return check_st(a, b, {}, kExactTolerance);
        case Relation::icx: return check_icx(a, b, {}, kExactTolerance);
        default: return check_cx(a, b, kExactTolerance, {}, kExactTolerance);
    }
}

OrderVerdict conclude(const Scenario& s, Relation r, Quantity q, std::size_t index) {
    return exact_check(r, marginal(s, false, q, index), marginal(s, true, q, index));
}

}  // namespace

std::span<const TheoremId> all_theorems() noexcept { return kAll; }

std::string_view theorem_key(TheoremId id) noexcept {
    for (const auto& t : kTheorems) {
        if (t.id == id) {
            return t.key;
        }
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_key(std::string_view key) noexcept {
    for (const auto& t : kTheorems) {
        if (t.key == key) {
            return t.id;
        }
    }
    return std::nullopt;
}

std::string_view theorem_statement(TheoremId id) noexcept {
    for (const auto& t : kTheorems) {
        if (t.id == id) {
            return t.statement;
        }
    }
    return "?";
}

ParamLaw ParamLaw::fixed(const GarchParams& p) {
    return {DiscreteDist::point_mass(p.alpha0()), DiscreteDist::point_mass(p.alpha1()),
            DiscreteDist::point_mass(p.beta1())};
}

TheoremReport verify_theorem(TheoremId id, const Scenario& scenario) {
    TheoremReport report{id, scenario, {}, false, std::nullopt, {}, 0.0, false, false};
    report.derived = !is_param_theorem(id) && scenario.perturbed_indices.size() > 1;
    report.premises = premises_for(id, scenario);
    report.premises_hold = std::all_of(report.premises.begin(), report.premises.end(),
                                       [](const PremiseCheck& p) { return p.holds; });
    if (!report.premises_hold) {
        return report;
    }

    const Scenario& s = scenario;
    const std::size_t n = s.n;
    switch (id) {
        case TheoremId::sigma_st: report.conclusion = conclude(s, Relation::st, Quantity::sigma, n + 1); break;
        case TheoremId::sigma_icx: report.conclusion = conclude(s, Relation::icx, Quantity::sigma, n + 1); break;
        case TheoremId::sigma2_st: report.conclusion = conclude(s, Relation::st, Quantity::sigma_squared, n + 1); break;
        case TheoremId::sigma2_icx: report.conclusion = conclude(s, Relation::icx, Quantity::sigma_squared, n + 1); break;
        case TheoremId::x_abs_st: report.conclusion = conclude(s, Relation::st, Quantity::abs_x, n); break;
        case TheoremId::x_abs_icx: report.conclusion = conclude(s, Relation::icx, Quantity::abs_x, n); break;
        case TheoremId::x_sq_st: report.conclusion = conclude(s, Relation::st, Quantity::x_squared, n); break;
        case TheoremId::x_sq_icx: report.conclusion = conclude(s, Relation::icx, Quantity::x_squared, n); break;
        case TheoremId::propconv: report.conclusion = conclude(s, Relation::cx, Quantity::x, n); break;
        case TheoremId::sums_cx:
        case TheoremId::params_sums: report.conclusion = conclude(s, Relation::cx, Quantity::sum, n); break;
        case TheoremId::multivariate: {
            const MultiSample a = joint(s, false);
            const MultiSample b = joint(s, true);
            report.conclusion = check_supermodular_cx(
                a, b, TestFunctionFamily::supermodular_convex(n + 1), kExactTolerance);
            break;
        }
        case TheoremId::params_prop:
            report.conclusion = conclude(s, Relation::cx, Quantity::x, n);
            report.additional_conclusions.push_back(conclude(s, Relation::st, Quantity::abs_x, n));
            report.additional_conclusions.push_back(conclude(s, Relation::st, Quantity::x_squared, n));
            break;
    }

    report.slack = report.conclusion->slack();
    bool ok = accepted(report.conclusion->direction);
    for (const auto& v : report.additional_conclusions) {
        report.slack = std::min(report.slack, v.slack());
        ok = ok && accepted(v.direction);
    }
    report.passed = ok && report.slack >= -kExactTolerance;
    return report;
}

}  // namespace garchord::oracle
