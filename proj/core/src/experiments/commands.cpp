#include "garchord/experiments/commands.hpp"

#include "detail/format.hpp"
#include "experiments/output.hpp"
#include "garchord/kde.hpp"
#include "garchord/oracle/theorems.hpp"
#include "garchord/serialize.hpp"
#include "garchord/simulation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace garchord::experiments {

namespace {

using detail::OutputDir;
using garchord::detail::format_double;

void require_statistical_paths(const ExperimentConfig& config) {
    if (config.n_paths < kMinStatisticalPaths) {
        throw ConfigError("n_paths = " + std::to_string(config.n_paths) + " is below the statistical floor of " +
                          std::to_string(kMinStatisticalPaths));
    }
}

VariantSummary summarize(std::string name, std::string params, const EmpiricalDist& d) {
    VariantSummary s;
    s.name = std::move(name);
    s.params = std::move(params);
    s.n = d.size();
    s.mean = d.mean();
    s.variance = d.sample_variance();
    const double m2 = d.central_moment(2);
    const double m4 = d.central_moment(4);
    s.beta2 = m2 > 0.0 ? m4 / (m2 * m2) : 0.0;
    const double n = static_cast<double>(d.size());
    s.mean_se = std::sqrt(s.variance / n);
    s.variance_se = std::sqrt(std::max(m4 - m2 * m2, 0.0) / n);
    return s;
}

PathBatch run(const ExperimentConfig& config, const GarchParams& params, const InnovationSpec& innovation,
              std::uint64_t seed) {
    SimulationOptions opts;
    opts.workers = config.workers;
    return simulate_paths(config.recursion_for(params), innovation, config.init, config.n_steps,
                          config.n_paths, seed, opts);
}

bool accepted(Direction d) { return d == Direction::a_below_b || d == Direction::indistinguishable; }

Gate consistency_gate(const ExperimentReport& report) {
    for (const auto& v : report.verdicts) {
        if (!v.verdict.consistent()) {
            return {"verdicts consistent with their gaps", false,
                    v.quantity + " " + v.baseline + " vs " + v.variant};
        }
    }
    return {"verdicts consistent with their gaps", true, std::to_string(report.verdicts.size()) + " verdicts"};
}

void write_verdict_curves(const OutputDir& dir, const std::string& name, const OrderVerdict& v,
                          ExperimentReport& report) {
    const bool st = v.relation == Relation::st;
    dir.write(name, [&](std::ostream& out) {
        write_curves_csv(out, v, st ? "cdf_A" : "stop_loss_A", st ? "cdf_B" : "stop_loss_B");
    }, report);
}

GarchParams with_param(const ExperimentConfig& config, const std::string& name, double value) {
    const GarchParams& p = config.params;
    if (name == "alpha0") return config.make_params(value, p.alpha1(), p.beta1());
    if (name == "alpha1") return config.make_params(p.alpha0(), value, p.beta1());
    if (name == "beta1") return config.make_params(p.alpha0(), p.alpha1(), value);
    throw ConfigError("sweep parameter must be alpha0, alpha1 or beta1, got '" + name + "'");
}

}  // namespace

ExperimentReport cmd_fig1(const ExperimentConfig& config) {
    if (config.model != ModelKind::garch11) {
        throw ConfigError("fig1 requires model garch11");
    }
    require_statistical_paths(config);
    const std::uint64_t seed = config.require_seed();
    const std::string tag = std::to_string(seed);
    const std::vector<Variant> variants = config.variants.empty() ? default_fig1_variants(config) : config.variants;

    ExperimentReport report;
    report.experiment = "fig1";
    report.seed = tag;
    const OutputDir dir(config.outputs);

    struct Run {
        std::string name;
        EmpiricalDist sums;
    };
    std::vector<Run> runs;
    std::vector<Variant> all{{"baseline", config.params}};
    all.insert(all.end(), variants.begin(), variants.end());
    for (const auto& v : all) {
        const PathBatch batch = run(config, v.params, config.innovations, seed);
        dir.write(artifact_name("fig1-samples", v.name, tag, "csv"),
                  [&](std::ostream& out) { write_batch_csv(out, batch); }, report);
        runs.push_back({v.name, EmpiricalDist(logreturn_sums(batch))});
        report.summaries.push_back(summarize(v.name, v.params.describe(), runs.back().sums));
    }

    std::vector<const EmpiricalDist*> ptrs;
    for (const auto& r : runs) {
        ptrs.push_back(&r.sums);
    }
    const std::vector<double> grid = even_grid(ptrs, 512);
    const double bw = pooled_silverman_bandwidth(ptrs);
    report.diagnostics.emplace_back("kde_bandwidth", bw);
    const std::vector<double> base_density = kde_evaluate(runs.front().sums, bw, grid);
    for (const auto& r : runs) {
        const std::vector<double> density = &r == &runs.front() ? base_density : kde_evaluate(r.sums, bw, grid);
        dir.write(artifact_name("fig1-density", r.name, tag, "csv"),
                  [&](std::ostream& out) { detail::write_curve_csv(out, grid, base_density, density); }, report);
    }

    const Distribution base(runs.front().sums);
    const VariantSummary& bs = report.summaries.front();
    for (std::size_t i = 1; i < runs.size(); ++i) {
        const Run& r = runs[i];
        const VariantSummary& vs = report.summaries[i];
        OrderVerdict v = check_cx(base, Distribution(r.sums));
        write_verdict_curves(dir, artifact_name("fig1-stoploss", r.name, tag, "csv"), v, report);
        report.gates.push_back({"cx(S_n) baseline below " + r.name + " within the band", accepted(v.direction),
                                to_string(v.direction)});
        report.verdicts.push_back({"S_n", "baseline", r.name, std::move(v)});

        const double se = std::sqrt(bs.variance_se * bs.variance_se + vs.variance_se * vs.variance_se);
        std::ostringstream detail;
        detail << "Var gap " << format_double(vs.variance - bs.variance) << ", 4 SE " << format_double(4.0 * se);
        report.gates.push_back({"Var(S_n) of " + r.name + " above baseline beyond 4 SE",
                                vs.variance - bs.variance > 4.0 * se, detail.str()});
    }
    for (const auto& s : report.summaries) {
        report.gates.push_back({"E[S_n] of " + s.name + " within 4 SE of 0", std::abs(s.mean) <= 4.0 * s.mean_se,
                                "mean " + format_double(s.mean) + ", SE " + format_double(s.mean_se)});
    }
    report.gates.push_back(consistency_gate(report));
    report.notes.push_back("all variants share the seed (common random numbers)");
    report.notes.push_back("densities use one pooled grid and one pooled Silverman bandwidth");
    dir.finish(report);
    return report;
}

ExperimentReport cmd_verify(const std::string& theorem, const std::optional<std::string>& scenario_file,
                            const std::string& out_dir) {
    using namespace oracle;
    std::vector<TheoremId> ids;
    if (theorem == "all") {
        const auto all = all_theorems();
        ids.assign(all.begin(), all.end());
        if (scenario_file) {
            throw ConfigError("a scenario file needs a single theorem id, not 'all'");
        }
    } else if (const auto id = parse_theorem_key(theorem)) {
        ids.push_back(*id);
    } else {
        std::string valid;
        for (const TheoremId t : all_theorems()) {
            valid += " " + std::string(theorem_key(t));
        }
        throw ConfigError("unknown theorem id '" + theorem + "'; valid ids: all" + valid);
    }

    std::optional<std::vector<Scenario>> custom;
    if (scenario_file) {
        std::ifstream in(*scenario_file);
        if (!in) {
            throw ConfigError("cannot read scenario file '" + *scenario_file + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        try {
            custom = parse_scenarios(buf.str());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }

    ExperimentReport report;
    report.experiment = "verify";
    report.seed = "exact";
    std::vector<TheoremReport> results;
    for (const TheoremId id : ids) {
        const std::vector<Scenario> scenarios = custom ? *custom : bundled_scenarios(id);
        for (const auto& s : scenarios) {
            TheoremReport r;
            try {
                r = verify_theorem(id, s);
            } catch (const std::length_error& e) {
                throw ConfigError(s.name + ": " + e.what());
            } catch (const std::invalid_argument& e) {
                throw ConfigError(s.name + ": " + e.what());
            }
            const std::string label = std::string(theorem_key(id)) + "/" + s.name;
            if (!r.premises_hold) {
                report.premise_failure = true;
                std::string failed;
                for (const auto& p : r.premises) {
                    if (!p.holds) {
                        failed += (failed.empty() ? "" : "; ") + p.name;
                    }
                }
                report.notes.push_back(label + ": premise failed (" + failed + ")");
            } else {
                report.gates.push_back({label, r.passed, "slack " + format_double(r.slack)});
            }
            results.push_back(std::move(r));
        }
    }
    const OutputDir dir(out_dir);
    const std::string body = reports_json(results);
    dir.write(artifact_name("verify", theorem, "exact", "json"),
              [&](std::ostream& out) { out << body << '\n'; }, report);
    dir.finish(report);
    return report;
}

ExperimentReport cmd_sweep(const ExperimentConfig& config, const SweepSpec& sweep) {
    require_statistical_paths(config);
    if (sweep.values.empty()) {
        throw ConfigError("sweep needs at least one value");
    }
    for (std::size_t i = 1; i < sweep.values.size(); ++i) {
        if (!(sweep.values[i] > sweep.values[i - 1])) {
            throw ConfigError("sweep values must be strictly increasing");
        }
    }
    std::vector<GarchParams> params;
    for (const double v : sweep.values) {
        params.push_back(with_param(config, sweep.parameter, v));
    }
    const std::uint64_t seed = config.require_seed();
    const std::string tag = std::to_string(seed);

    ExperimentReport report;
    report.experiment = "sweep";
    report.seed = tag;
    const OutputDir dir(config.outputs);

    struct Run {
        std::string name;
        EmpiricalDist sums;
        EmpiricalDist x;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const PathBatch batch = run(config, params[i], config.innovations, seed);
        const std::string name = sweep.parameter + "=" + format_double(sweep.values[i]);
        runs.push_back({name, EmpiricalDist(logreturn_sums(batch)), EmpiricalDist(batch.x_column(config.n_steps))});
        report.summaries.push_back(summarize(name, params[i].describe(), runs.back().sums));
    }

    std::vector<double> base_var(runs.size(), report.summaries.front().variance);
    std::vector<double> var;
    for (const auto& s : report.summaries) {
        var.push_back(s.variance);
    }
    dir.write(artifact_name("sweep-variance", sweep.parameter, tag, "csv"),
              [&](std::ostream& out) { detail::write_curve_csv(out, sweep.values, base_var, var); }, report);

    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        const Run& a = runs[i];
        const Run& b = runs[i + 1];
        const Distribution xa(a.x);
        const Distribution xb(b.x);
        std::vector<PairVerdict> pair{
            {"|X_n|", a.name, b.name, check_st(xa.abs(), xb.abs())},
            {"X_n", a.name, b.name, check_cx(xa, xb)},
            {"S_n", a.name, b.name, check_cx(Distribution(a.sums), Distribution(b.sums))},
        };
        for (auto& p : pair) {
            report.gates.push_back({p.quantity + " " + to_string(p.verdict.relation) + " " + a.name + " below " + b.name,
                                    accepted(p.verdict.direction), to_string(p.verdict.direction)});
            report.verdicts.push_back(std::move(p));
        }
        report.gates.push_back({"Var(S_n) increases from " + a.name + " to " + b.name, var[i + 1] > var[i],
                                format_double(var[i]) + " -> " + format_double(var[i + 1])});
    }
    if (runs.size() == 1) {
        report.notes.push_back("single sweep value: no pairwise verdicts");
    }
    report.gates.push_back(consistency_gate(report));
    dir.finish(report);
    return report;
}

ExperimentReport cmd_compare_innovations(const ExperimentConfig& config, const InnovationSpec& a,
                                         const InnovationSpec& b) {
    require_statistical_paths(config);
    const std::uint64_t seed = config.require_seed();
    const std::string tag = std::to_string(seed);

    ExperimentReport report;
    report.experiment = "compare-innovations";
    report.seed = tag;
    const OutputDir dir(config.outputs);

    const PathBatch ba = run(config, config.params, a, seed);
    const PathBatch bb = run(config, config.params, b, seed);
    const Distribution xa(EmpiricalDist(ba.x_column(config.n_steps)));
    const Distribution xb(EmpiricalDist(bb.x_column(config.n_steps)));
    const EmpiricalDist sa(logreturn_sums(ba));
    const EmpiricalDist sb(logreturn_sums(bb));
    report.summaries.push_back(summarize("A", a.describe(), sa));
    report.summaries.push_back(summarize("B", b.describe(), sb));

    struct Item {
        const char* slug;
        PairVerdict verdict;
    };
    std::vector<Item> items{
        {"abs_x", {"|X_n|", "A", "B", check_st(xa.abs(), xb.abs())}},
        {"x_sq", {"X_n^2", "A", "B", check_icx(xa.square(), xb.square())}},
        {"x", {"X_n", "A", "B", check_cx(xa, xb)}},
        {"s_n", {"S_n", "A", "B", check_cx(Distribution(sa), Distribution(sb))}},
    };
    for (auto& item : items) {
        write_verdict_curves(dir, artifact_name("compare-innovations", item.slug, tag, "csv"), item.verdict.verdict,
                             report);
        report.verdicts.push_back(std::move(item.verdict));
    }

    for (const auto& [label, spec] : {std::pair{"A", &a}, std::pair{"B", &b}}) {
        try {
            report.diagnostics.emplace_back(std::string("beta2_innovation_") + label, spec->kurtosis());
        } catch (const std::domain_error&) {
            report.notes.push_back(std::string("innovation ") + label + " has an infinite fourth moment");
        }
    }
    report.diagnostics.emplace_back("beta2_X_n_A", kurtosis_beta2(xa));
    report.diagnostics.emplace_back("beta2_X_n_B", kurtosis_beta2(xb));
    report.notes.push_back("both laws are driven by the same uniforms (common random numbers)");
    report.notes.push_back("verdicts are reported as measured; no direction is asserted");
    report.gates.push_back(consistency_gate(report));
    dir.finish(report);
    return report;
}

ExperimentReport cmd_simulate(const ExperimentConfig& config) {
    const std::uint64_t seed = config.require_seed();
    const std::string tag = std::to_string(seed);
    ExperimentReport report;
    report.experiment = "simulate";
    report.seed = tag;
    const OutputDir dir(config.outputs);
    const PathBatch batch = run(config, config.params, config.innovations, seed);
    dir.write(artifact_name("simulate", "baseline", tag, "csv"),
              [&](std::ostream& out) { write_batch_csv(out, batch); }, report);
    if (batch.n_paths() >= 2) {
        report.summaries.push_back(summarize("baseline", config.params.describe(), EmpiricalDist(logreturn_sums(batch))));
    }
    dir.finish(report);
    return report;
}

}  // namespace garchord::experiments
