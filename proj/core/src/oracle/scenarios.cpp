#include "garchord/oracle/dilation.hpp"
#include "garchord/oracle/theorems.hpp"

#include "detail/json_convert.hpp"

#include <cmath>
#include <initializer_list>
#include <set>
#include <stdexcept>

namespace garchord::oracle {

namespace {

using json = nlohmann::ordered_json;

DiscreteDist two(double a) { return DiscreteDist::symmetric_two_point(a); }
DiscreteDist three(double a, double p) { return DiscreteDist::symmetric_three_point(a, p); }
DiscreteDist dilate(const DiscreteDist& base, double spread) {
    return make_dilation(base, spread).dilated;
}
DiscreteDist law(std::initializer_list<Atom> atoms) { return DiscreteDist(std::vector<Atom>(atoms)); }

const GarchParams kP1(0.1, 0.3, 0.5);
const GarchParams kP2(0.2, 0.2, 0.2);
const GarchParams kP3(0.05, 0.1, 0.85);

Scenario make(std::string name, RecursionKind kind, std::string recursion, const GarchParams& p,
              DiscreteDist init, DiscreteDist eps, DiscreteDist eps_tilde,
              std::vector<std::size_t> indices, std::size_t n) {
    Scenario s;
    s.name = std::move(name);
    s.kind = kind;
    s.recursion = std::move(recursion);
    s.params = ParamLaw::fixed(p);
    s.initial_state = std::move(init);
    s.innovation = std::move(eps);
    s.perturbed_innovation = std::move(eps_tilde);
    s.perturbed_indices = std::move(indices);
    s.n = n;
    return s;
}

// Stochastic increase of |e| (or e^2): scaling and mass moved away from 0.
std::vector<Scenario> st_scenarios(RecursionKind kind) {
    const bool m1 = kind == RecursionKind::m1;
    const std::string alt = m1 ? "avgarch" : "arch1";
    const DiscreteDist random_init = m1 ? law({{0.5, 0.5}, {1.5, 0.5}}) : law({{0.5, 0.5}, {2.0, 0.5}});
    return {
        make("two-point-scaled", kind, "garch11", kP1, DiscreteDist::point_mass(1.0), two(1.0),
             two(1.5), {1}, 4),
        make("three-point-mass-shift", kind, alt, kP2, random_init, three(1.0, 0.25),
             three(1.0, 0.4), {0}, 5),
        make("three-point-scaled-last-step", kind, "garch11", kP3, DiscreteDist::point_mass(0.8),
             three(std::sqrt(2.0), 0.25), three(1.3 * std::sqrt(2.0), 0.25), {7}, 7),
        make("chained-two-point", kind, "garch11", kP1, DiscreteDist::point_mass(1.0), two(1.0),
             two(1.2), {0, 1, 2, 3, 4}, 4),
    };
}

// Convex increase of e (hence icx increase of |e| and e^2): dilations.
std::vector<Scenario> dilation_scenarios(RecursionKind kind, std::size_t max_n) {
    const bool m1 = kind == RecursionKind::m1;
    const std::string alt = m1 ? "avgarch" : "arch1";
    const DiscreteDist random_init = m1 ? law({{0.5, 0.5}, {1.0, 0.5}}) : law({{0.25, 0.5}, {1.0, 0.5}});
    const DiscreteDist sqrt2 = three(std::sqrt(2.0), 0.25);
    const std::size_t n3 = std::min<std::size_t>(max_n, 6);
    return {
        make("two-point-dilation", kind, "garch11", kP1, DiscreteDist::point_mass(1.0), two(1.0),
             dilate(two(1.0), 0.5), {1}, std::min<std::size_t>(max_n, 4)),
        make("three-point-dilation", kind, alt, kP2, DiscreteDist::point_mass(1.0), three(1.0, 0.25),
             dilate(three(1.0, 0.25), 1.0), {0}, std::min<std::size_t>(max_n, 5)),
        make("sqrt2-dilation-random-init", kind, "garch11", kP3, random_init, sqrt2,
             dilate(sqrt2, 0.3), {n3 - 1}, n3),
        make("chained-two-point-dilation", kind, "garch11", kP1, DiscreteDist::point_mass(1.0),
             two(1.0), dilate(two(1.0), std::sqrt(2.0) - 1.0), {0, 2}, std::min<std::size_t>(max_n, 3)),
    };
}

Scenario param_scenario(std::string name, RecursionKind kind, ParamLaw lo, ParamLaw hi,
                        DiscreteDist init, DiscreteDist eps, std::size_t n) {
    Scenario s;
    s.name = std::move(name);
    s.kind = kind;
    s.recursion = "garch11";
    s.params = std::move(lo);
    s.perturbed_params = std::move(hi);
    s.initial_state = std::move(init);
    s.innovation = std::move(eps);
    s.n = n;
    return s;
}

std::vector<Scenario> param_scenarios() {
    const DiscreteDist pm = DiscreteDist::point_mass(0.2);
    return {
        param_scenario("alpha1-0.2-to-0.5", RecursionKind::m2, ParamLaw::fixed(kP2),
                       ParamLaw::fixed(GarchParams(0.2, 0.5, 0.2)), DiscreteDist::point_mass(1.0),
                       two(1.0), 4),
        param_scenario("random-alpha0-beta1", RecursionKind::m1,
                       {law({{0.1, 0.5}, {0.2, 0.5}}), DiscreteDist::point_mass(0.3),
                        law({{0.4, 0.5}, {0.5, 0.5}})},
                       {law({{0.15, 0.5}, {0.3, 0.5}}), DiscreteDist::point_mass(0.3),
                        law({{0.5, 0.5}, {0.6, 0.5}})},
                       DiscreteDist::point_mass(1.0), three(1.0, 0.25), 4),
        param_scenario("beta1-0.2-to-0.5-random-init", RecursionKind::m2, ParamLaw::fixed(kP2),
                       {pm, pm, DiscreteDist::point_mass(0.5)}, law({{0.5, 0.5}, {1.5, 0.5}}),
                       three(std::sqrt(2.0), 0.25), 5),
        param_scenario("random-alpha1-mass-shift", RecursionKind::m2,
                       {DiscreteDist::point_mass(0.1), law({{0.1, 0.5}, {0.3, 0.5}}),
                        DiscreteDist::point_mass(0.5)},
                       {DiscreteDist::point_mass(0.1), law({{0.1, 0.2}, {0.3, 0.8}}),
                        DiscreteDist::point_mass(0.5)},
                       DiscreteDist::point_mass(1.0), two(1.0), 5),
    };
}

// JSON helpers ----------------------------------------------------------

json dist_json(const DiscreteDist& d) {
    json points = json::array();
    json probs = json::array();
    for (const Atom& a : d.atoms()) {
        points.push_back(a.point);
        probs.push_back(a.prob);
    }
    return json{{"points", std::move(points)}, {"probs", std::move(probs)}};
}

json param_law_json(const ParamLaw& p) {
    return json{{"alpha0", dist_json(p.alpha0)},
                {"alpha1", dist_json(p.alpha1)},
                {"beta1", dist_json(p.beta1)}};
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) {
        throw std::invalid_argument(where + ": expected an object");
    }
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (!keys.contains(item.key())) {
            throw std::invalid_argument(where + ": unknown key '" + item.key() + "'");
        }
    }
}

DiscreteDist parse_dist(const json& j, const std::string& where) {
    if (j.is_number()) {
        return DiscreteDist::point_mass(j.get<double>());
    }
    reject_unknown(j, {"points", "probs"}, where);
    const auto points = j.at("points").get<std::vector<double>>();
    std::vector<double> probs;
    if (j.contains("probs")) {
        probs = j.at("probs").get<std::vector<double>>();
    } else {
        probs.assign(points.size(), 1.0 / static_cast<double>(points.size()));
    }
    if (points.size() != probs.size() || points.empty()) {
        throw std::invalid_argument(where + ": points and probs must be non-empty and of equal length");
    }
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < points.size(); ++i) {
        atoms.push_back({points[i], probs[i]});
    }
    return DiscreteDist(std::move(atoms));
}

ParamLaw parse_param_law(const json& j, const std::string& where) {
    reject_unknown(j, {"alpha0", "alpha1", "beta1"}, where);
    return {parse_dist(j.at("alpha0"), where + ".alpha0"), parse_dist(j.at("alpha1"), where + ".alpha1"),
            parse_dist(j.at("beta1"), where + ".beta1")};
}

Scenario parse_scenario(const json& j, std::size_t index) {
    const std::string where = "scenarios[" + std::to_string(index) + "]";
    reject_unknown(j,
                   {"name", "model", "recursion", "params", "perturbed_params", "initial_state",
                    "innovation", "perturbed_innovation", "perturbed_indices", "n"},
                   where);
    Scenario s;
    s.name = j.value("name", where);
    const std::string model = j.value("model", "m1");
    if (model == "m1") {
        s.kind = RecursionKind::m1;
    } else if (model == "m2") {
        s.kind = RecursionKind::m2;
    } else {
        throw std::invalid_argument(where + ".model must be m1 or m2");
    }
    s.recursion = j.value("recursion", "garch11");
    if (j.contains("params")) {
        s.params = parse_param_law(j.at("params"), where + ".params");
    }
    if (j.contains("perturbed_params")) {
        s.perturbed_params = parse_param_law(j.at("perturbed_params"), where + ".perturbed_params");
    }
    if (j.contains("initial_state")) {
        s.initial_state = parse_dist(j.at("initial_state"), where + ".initial_state");
    }
    if (j.contains("innovation")) {
        s.innovation = parse_dist(j.at("innovation"), where + ".innovation");
    }
    if (j.contains("perturbed_innovation")) {
        s.perturbed_innovation = parse_dist(j.at("perturbed_innovation"), where + ".perturbed_innovation");
    }
    if (j.contains("perturbed_indices")) {
        s.perturbed_indices = j.at("perturbed_indices").get<std::vector<std::size_t>>();
    }
    if (j.contains("n")) {
        s.n = j.at("n").get<std::size_t>();
    }
    if (s.n > 12) {
        throw std::invalid_argument(where + ".n must be at most 12");
    }
    return s;
}

json scenario_json(const Scenario& s) {
    json j{{"name", s.name},
           {"model", to_string(s.kind)},
           {"recursion", s.recursion},
           {"params", param_law_json(s.params)}};
    if (s.perturbed_params) {
        j["perturbed_params"] = param_law_json(*s.perturbed_params);
    }
    j["initial_state"] = dist_json(s.initial_state);
    j["innovation"] = dist_json(s.innovation);
    if (s.perturbed_innovation) {
        j["perturbed_innovation"] = dist_json(*s.perturbed_innovation);
    }
    j["perturbed_indices"] = s.perturbed_indices;
    j["n"] = s.n;
    return j;
}

json report_to_json(const TheoremReport& r) {
    const JsonOptions opts{};
    json premises = json::array();
    for (const auto& p : r.premises) {
        json pj{{"name", p.name}, {"holds", p.holds}};
        if (!p.detail.empty()) {
            pj["detail"] = p.detail;
        }
        if (p.verdict) {
            pj["verdict"] = detail::verdict_json(*p.verdict, opts);
        }
        premises.push_back(std::move(pj));
    }
    json j{{"theorem", theorem_key(r.theorem)},
           {"statement", theorem_statement(r.theorem)},
           {"scenario", scenario_json(r.scenario)},
           {"exact", true},
           {"premises_hold", r.premises_hold},
           {"premises", std::move(premises)}};
    j["conclusion"] = r.conclusion ? detail::verdict_json(*r.conclusion, opts) : json(nullptr);
    if (!r.additional_conclusions.empty()) {
        json extra = json::array();
        for (const auto& v : r.additional_conclusions) {
            extra.push_back(detail::verdict_json(v, opts));
        }
        j["additional_conclusions"] = std::move(extra);
    }
    j["slack"] = r.slack;
    j["derived"] = r.derived;
    j["passed"] = r.passed;
    return j;
}

}  // namespace

std::vector<Scenario> bundled_scenarios(TheoremId id) {
    switch (id) {
        case TheoremId::sigma_st:
        case TheoremId::x_abs_st: return st_scenarios(RecursionKind::m1);
        case TheoremId::sigma2_st:
        case TheoremId::x_sq_st: return st_scenarios(RecursionKind::m2);
        case TheoremId::sigma_icx:
        case TheoremId::x_abs_icx:
        case TheoremId::propconv:
        case TheoremId::sums_cx: return dilation_scenarios(RecursionKind::m1, 7);
        case TheoremId::sigma2_icx:
        case TheoremId::x_sq_icx: return dilation_scenarios(RecursionKind::m2, 7);
        case TheoremId::multivariate: return dilation_scenarios(RecursionKind::m1, 5);
        case TheoremId::params_prop:
        case TheoremId::params_sums: return param_scenarios();
    }
    return {};
}

std::vector<Scenario> parse_scenarios(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario file: ") + e.what());
    }
    reject_unknown(j, {"schema", "theorem", "scenarios"}, "scenario file");
    if (j.value("schema", 1) != 1) {
        throw std::invalid_argument("scenario file: unsupported schema");
    }
    const json& list = j.at("scenarios");
    if (!list.is_array()) {
        throw std::invalid_argument("scenario file: 'scenarios' must be an array");
    }
    std::vector<Scenario> out;
    try {
        for (std::size_t i = 0; i < list.size(); ++i) {
            out.push_back(parse_scenario(list[i], i));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("scenario file: ") + e.what());
    }
    return out;
}

std::string report_json(const TheoremReport& report, int indent) {
    return report_to_json(report).dump(indent);
}

std::string reports_json(std::span<const TheoremReport> reports, int indent) {
    json list = json::array();
    std::size_t failures = 0;
    for (const auto& r : reports) {
        failures += r.passed ? 0 : 1;
        list.push_back(report_to_json(r));
    }
    json j{{"schema", 1},
           {"passed", failures == 0},
           {"count", reports.size()},
           {"failures", failures},
           {"reports", std::move(list)}};
    return j.dump(indent);
}

}  // namespace garchord::oracle
