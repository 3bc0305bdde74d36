#include "garchord/experiments/config.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace garchord::experiments {

namespace {

using json = nlohmann::json;

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& item : obj.items()) {
        if (!keys.contains(item.key())) {
            throw ConfigError(where + ": unknown key '" + item.key() + "'");
        }
    }
}

double get_number(const json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ConfigError(where + ": expected a number");
    }
    return j.get<double>();
}

std::size_t get_count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) {
        throw ConfigError(where + ": expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

InnovationSpec parse_innovation(const json& j, const std::string& where) {
    if (j.is_string()) {
        return parse_innovation_shorthand(j.get<std::string>());
    }
    reject_unknown(j, {"family", "df", "scale", "normalized", "support"}, where);
    const std::string family = j.value("family", "gaussian");
    const double scale = j.contains("scale") ? get_number(j.at("scale"), where + ".scale") : 1.0;
    try {
        if (family == "gaussian") {
            return InnovationSpec::gaussian(scale);
        }
        if (family == "student_t") {
            if (!j.contains("df")) {
                throw ConfigError(where + ": student_t needs df");
            }
            return InnovationSpec::student_t(get_number(j.at("df"), where + ".df"), scale,
                                             j.value("normalized", true));
        }
        if (family == "laplace") {
            return InnovationSpec::laplace(scale, j.value("normalized", true));
        }
        if (family == "discrete") {
            const json& sup = j.at("support");
            reject_unknown(sup, {"points", "probs"}, where + ".support");
            const auto points = sup.at("points").get<std::vector<double>>();
            const auto probs = sup.at("probs").get<std::vector<double>>();
            if (points.size() != probs.size() || points.empty()) {
                throw ConfigError(where + ".support: points and probs must match");
            }
            std::vector<Atom> atoms;
            for (std::size_t i = 0; i < points.size(); ++i) {
                atoms.push_back({points[i], probs[i]});
            }
            if (!DiscreteDist(atoms).is_symmetric()) {
                throw PremiseError(where + ": innovation law is not symmetric about 0");
            }
            return InnovationSpec::discrete(std::move(atoms), scale, j.value("normalized", false));
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const PremiseError&) {
        throw;
    } catch (const json::exception& e) {
        throw ConfigError(where + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ": unknown family '" + family + "'");
}

struct RawParams {
    std::optional<double> alpha0;
    std::optional<double> alpha1;
    std::optional<double> beta1;
};

RawParams parse_raw_params(const json& j, const std::string& where, bool allow_name = false) {
    if (!j.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        if (k != "alpha0" && k != "alpha1" && k != "beta1" && !(allow_name && k == "name")) {
            throw ConfigError(where + ": unknown key '" + k + "'");
        }
    }
    RawParams r;
    if (j.contains("alpha0")) r.alpha0 = get_number(j.at("alpha0"), where + ".alpha0");
    if (j.contains("alpha1")) r.alpha1 = get_number(j.at("alpha1"), where + ".alpha1");
    if (j.contains("beta1")) r.beta1 = get_number(j.at("beta1"), where + ".beta1");
    return r;
}

}  // namespace

const char* to_string(ModelKind m) noexcept {
    switch (m) {
        case ModelKind::garch11: return "garch11";
        case ModelKind::m1_custom: return "m1_custom";
        case ModelKind::m2_custom: return "m2_custom";
    }
    return "?";
}

RecursionKind ExperimentConfig::kind() const noexcept {
    return model == ModelKind::m1_custom ? RecursionKind::m1 : RecursionKind::m2;
}

RecursionMap ExperimentConfig::recursion_for(const GarchParams& p) const {
    try {
        return make_recursion(kind(), model == ModelKind::garch11 ? "garch11" : recursion, p);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

GarchParams ExperimentConfig::make_params(double alpha0, double alpha1, double beta1) const {
    try {
        if (allow_nonstationary) {
            return GarchParams::unchecked(alpha0, alpha1, beta1);
        }
        return GarchParams(alpha0, alpha1, beta1);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(e.what()) +
                          (allow_nonstationary ? "" : " (pass --allow-nonstationary to override)"));
    }
}

std::uint64_t ExperimentConfig::require_seed() const {
    if (!seed) {
        throw ConfigError("a seed is required (config 'seed' or --seed)");
    }
    return *seed;
}

InnovationSpec parse_innovation_shorthand(std::string_view text) {
    std::string_view head = text;
    double scale = 1.0;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        head = text.substr(0, colon);
        const auto tail = text.substr(colon + 1);
        const auto res = std::from_chars(tail.data(), tail.data() + tail.size(), scale);
        if (res.ec != std::errc{} || res.ptr != tail.data() + tail.size()) {
            throw ConfigError("bad innovation scale in '" + std::string(text) + "'");
        }
    }
    try {
        if (head == "gaussian") {
            return InnovationSpec::gaussian(scale);
        }
        if (head == "laplace") {
            return InnovationSpec::laplace(scale, true);
        }
        if (head.size() > 1 && head.front() == 't') {
            double df = 0.0;
            const auto res = std::from_chars(head.data() + 1, head.data() + head.size(), df);
            if (res.ec == std::errc{} && res.ptr == head.data() + head.size()) {
                return InnovationSpec::student_t(df, scale, true);
            }
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown innovation '" + std::string(text) +
                      "' (expected gaussian[:scale], t<df>[:scale] or laplace[:scale])");
}

ExperimentConfig parse_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    reject_unknown(j,
                   {"model", "recursion", "params", "innovations", "innovations_b", "init", "n_steps",
                    "n_paths", "seed", "variants", "sweep", "outputs", "allow_nonstationary", "workers"},
                   "config");
    ExperimentConfig c;
    try {
        c.allow_nonstationary = j.value("allow_nonstationary", false);
        const std::string model = j.value("model", "garch11");
        if (model == "garch11") {
            c.model = ModelKind::garch11;
        } else if (model == "m1_custom") {
            c.model = ModelKind::m1_custom;
        } else if (model == "m2_custom") {
            c.model = ModelKind::m2_custom;
        } else {
            throw ConfigError("config.model: expected garch11, m1_custom or m2_custom");
        }
        c.recursion = j.value("recursion", c.model == ModelKind::m1_custom ? "avgarch" : "garch11");
        if (c.model == ModelKind::garch11 && c.recursion != "garch11") {
            throw ConfigError("config.recursion: model garch11 uses the garch11 recursion");
        }
        if (j.contains("params")) {
            const RawParams r = parse_raw_params(j.at("params"), "config.params");
            c.params = c.make_params(r.alpha0.value_or(0.2), r.alpha1.value_or(0.2), r.beta1.value_or(0.2));
        } else {
            c.params = c.make_params(0.2, 0.2, 0.2);
        }
        c.recursion_for(c.params);
        if (j.contains("innovations")) {
            c.innovations = parse_innovation(j.at("innovations"), "config.innovations");
        }
        if (j.contains("innovations_b")) {
            c.innovations_b = parse_innovation(j.at("innovations_b"), "config.innovations_b");
        }
        if (j.contains("init")) {
            const json& init = j.at("init");
            reject_unknown(init, {"mode", "value", "scale"}, "config.init");
            const std::string mode = init.value("mode", "half_gaussian");
            if (mode != "half_gaussian" && mode != "constant") {
                throw ConfigError("config.init.mode: expected half_gaussian or constant");
            }
            try {
                c.init = mode == "half_gaussian"
                             ? InitialStateSpec::half_gaussian(init.value("scale", 1.0))
                             : InitialStateSpec::constant(get_number(init.at("value"), "config.init.value"));
            } catch (const ConfigError&) {
                throw;
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config.init: ") + e.what());
            }
        }
        if (j.contains("n_steps")) c.n_steps = get_count(j.at("n_steps"), "config.n_steps");
        if (j.contains("n_paths")) c.n_paths = get_count(j.at("n_paths"), "config.n_paths");
        if (j.contains("seed")) {
            if (!j.at("seed").is_number_unsigned()) {
                throw ConfigError("config.seed: expected a nonnegative integer");
            }
            c.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("variants")) {
            const json& list = j.at("variants");
            if (!list.is_array()) {
                throw ConfigError("config.variants: expected an array");
            }
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string where = "config.variants[" + std::to_string(i) + "]";
                const RawParams r = parse_raw_params(list[i], where, true);
                if (!list[i].contains("name") || !list[i].at("name").is_string()) {
                    throw ConfigError(where + ": needs a string name");
                }
                Variant v{list[i].at("name").get<std::string>(),
                          c.make_params(r.alpha0.value_or(c.params.alpha0()),
                                        r.alpha1.value_or(c.params.alpha1()),
                                        r.beta1.value_or(c.params.beta1()))};
                if (v.params.alpha0() == c.params.alpha0() && v.params.alpha1() == c.params.alpha1() &&
                    v.params.beta1() == c.params.beta1()) {
                    throw ConfigError(where + ": variant does not differ from the baseline");
                }
                if (v.name == "baseline" || v.name.empty() || v.name.find("__") != std::string::npos ||
                    v.name.find('/') != std::string::npos) {
                    throw ConfigError(where + ": invalid variant name '" + v.name + "'");
                }
                c.variants.push_back(std::move(v));
            }
        }
        if (j.contains("sweep")) {
            const json& s = j.at("sweep");
            reject_unknown(s, {"parameter", "values"}, "config.sweep");
            c.sweep = SweepSpec{s.at("parameter").get<std::string>(), s.at("values").get<std::vector<double>>()};
        }
        c.outputs = j.value("outputs", c.outputs);
        if (j.contains("workers")) {
            c.workers = static_cast<unsigned>(get_count(j.at("workers"), "config.workers"));
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (c.n_steps == 0 || c.n_paths == 0) {
        throw ConfigError("config: n_steps and n_paths must be positive");
    }
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::vector<Variant> default_fig1_variants(const ExperimentConfig& config) {
    const GarchParams& p = config.params;
    return {
        {"alpha0", config.make_params(0.5, p.alpha1(), p.beta1())},
        {"alpha1", config.make_params(p.alpha0(), 0.5, p.beta1())},
        {"beta1", config.make_params(p.alpha0(), p.alpha1(), 0.5)},
    };
}

}  // namespace garchord::experiments
