// garchord: stochastic-order experiments on GARCH-type recursions.

#include "garchord/experiments/commands.hpp"
#include "garchord/simulation.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace gx = garchord::experiments;

namespace {

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> paths;
    std::optional<std::size_t> steps;
    std::optional<std::string> out;
    std::optional<unsigned> workers;
    bool allow_nonstationary = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--config", o.config, "JSON experiment config");
    cmd->add_option("--seed", o.seed, "RNG seed (required here or in the config)");
    cmd->add_option("--paths", o.paths, "number of simulated paths");
    cmd->add_option("--steps", o.steps, "horizon n (paths carry X_0..X_n)");
    cmd->add_option("--out", o.out, "output directory");
    cmd->add_option("--workers", o.workers, "simulation threads (0 = hardware concurrency)");
    cmd->add_flag("--allow-nonstationary", o.allow_nonstationary, "accept alpha1 + beta1 >= 1");
}

gx::ExperimentConfig resolve(const Overrides& o) {
    gx::ExperimentConfig c = o.config.empty() ? gx::ExperimentConfig{} : gx::load_config(o.config);
    if (o.allow_nonstationary) {
        c.allow_nonstationary = true;
    }
    if (o.seed) c.seed = *o.seed;
    if (o.paths) c.n_paths = *o.paths;
    if (o.steps) c.n_steps = *o.steps;
    if (o.out) c.outputs = *o.out;
    if (o.workers) c.workers = *o.workers;
    if (c.n_paths == 0 || c.n_steps == 0) {
        throw gx::ConfigError("--paths and --steps must be positive");
    }
    return c;
}

int finish(const gx::ExperimentReport& report) {
    for (const auto& g : report.gates) {
        std::cout << (g.passed ? "PASS " : "FAIL ") << g.name;
        if (!g.detail.empty()) {
            std::cout << " (" << g.detail << ")";
        }
        std::cout << '\n';
    }
    for (const auto& n : report.notes) {
        std::cout << "note: " << n << '\n';
    }
    std::cout << report.experiment << ": " << (report.passed() ? "ok" : "FAILED") << ", " << report.manifest.size()
              << " files\n";
    return static_cast<int>(report.exit_code());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic-order verification for GARCH-type recursions"};
    app.require_subcommand(1);

    Overrides common;
    auto* fig1 = app.add_subcommand("fig1", "baseline vs one-at-a-time parameter increases of S_n");
    add_common(fig1, common);

    std::string theorem;
    std::optional<std::string> scenarios;
    std::string verify_out = "out";
    auto* verify = app.add_subcommand("verify", "exact theorem checks by enumeration");
    verify->add_option("theorem", theorem, "theorem id or 'all'")->required();
    verify->add_option("--scenarios", scenarios, "JSON scenario file replacing the bundled suite");
    verify->add_option("--out", verify_out, "output directory");

    std::string parameter;
    std::vector<double> values;
    auto* sweep = app.add_subcommand("sweep", "pairwise verdicts along a parameter sweep");
    add_common(sweep, common);
    sweep->add_option("--parameter", parameter, "alpha0, alpha1 or beta1");
    sweep->add_option("--values", values, "strictly increasing values")->delimiter(',');

    std::string innov_a;
    std::string innov_b;
    auto* compare = app.add_subcommand("compare-innovations", "same process under two innovation laws");
    add_common(compare, common);
    compare->add_option("--innov-a", innov_a, "gaussian[:scale], t<df>[:scale] or laplace[:scale]");
    compare->add_option("--innov-b", innov_b, "second innovation law");

    auto* simulate = app.add_subcommand("simulate", "simulate paths and write path_id,S_n,sigma_n");
    add_common(simulate, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(gx::ExitCode::config_error);
    }

    try {
        if (*verify) {
            return finish(gx::cmd_verify(theorem, scenarios, verify_out));
        }
        const gx::ExperimentConfig config = resolve(common);
        if (*fig1) {
            return finish(gx::cmd_fig1(config));
        }
        if (*sweep) {
            gx::SweepSpec spec = config.sweep.value_or(gx::SweepSpec{});
            if (!parameter.empty()) spec.parameter = parameter;
            if (!values.empty()) spec.values = values;
            if (spec.parameter.empty()) {
                throw gx::ConfigError("sweep needs --parameter (or config.sweep)");
            }
            return finish(gx::cmd_sweep(config, spec));
        }
        if (*compare) {
            const garchord::InnovationSpec a =
                innov_a.empty() ? config.innovations : gx::parse_innovation_shorthand(innov_a);
            std::optional<garchord::InnovationSpec> b = config.innovations_b;
            if (!innov_b.empty()) {
                b = gx::parse_innovation_shorthand(innov_b);
            }
            if (!b) {
                throw gx::ConfigError("compare-innovations needs --innov-b (or config.innovations_b)");
            }
            return finish(gx::cmd_compare_innovations(config, a, *b));
        }
        return finish(gx::cmd_simulate(config));
    } catch (const gx::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return static_cast<int>(gx::ExitCode::config_error);
    } catch (const gx::PremiseError& e) {
        std::cerr << "premise failure: " << e.what() << '\n';
        return static_cast<int>(gx::ExitCode::premise_failure);
    } catch (const garchord::DivergenceError& e) {
        std::cerr << "divergence: " << e.what() << '\n';
        return static_cast<int>(gx::ExitCode::runtime_error);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(gx::ExitCode::runtime_error);
    }
}
