#pragma once

#include "garchord/experiments/config.hpp"
#include "garchord/orders.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace garchord::experiments {

/// Process exit statuses.
enum class ExitCode : int {
    ok = 0,
    verdict_failure = 1,
    config_error = 2,
    premise_failure = 3,
    runtime_error = 4,
};

struct VariantSummary {
    std::string name;
    std::string params;
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double beta2 = 0.0;
    double mean_se = 0.0;
    double variance_se = 0.0;
};

/// One comparison between a baseline law (A) and a variant law (B).
struct PairVerdict {
    std::string quantity;  // e.g. "S_n", "|X_n|"
    std::string baseline;
    std::string variant;
    OrderVerdict verdict;
};

struct Gate {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ExperimentReport {
    std::string experiment;
    std::string seed;  // decimal seed, or "exact" for oracle runs
    std::vector<VariantSummary> summaries;
    std::vector<PairVerdict> verdicts;
    std::vector<std::pair<std::string, double>> diagnostics;
    std::vector<Gate> gates;
    /// Files written under the output directory (relative names).
    std::vector<std::string> manifest;
    std::vector<std::string> notes;
    /// Premise failures found by oracle runs.
    bool premise_failure = false;
    /// Pre-rendered JSON body for oracle runs.
    std::string oracle_json;

    bool passed() const noexcept;
    ExitCode exit_code() const noexcept;
};

/// Baseline plus one-at-a-time variants of the GARCH(1,1) sums S_n with
/// common random numbers; writes samples, kernel densities on a pooled grid,
/// stop-loss curves and cx verdicts.
ExperimentReport cmd_fig1(const ExperimentConfig& config);

/// Theorem suite by key or "all"; optional scenario file replaces the
/// bundled suite.
ExperimentReport cmd_verify(const std::string& theorem, const std::optional<std::string>& scenario_file,
                            const std::string& out_dir);

/// Pairwise verdicts between consecutive sweep values.
ExperimentReport cmd_sweep(const ExperimentConfig& config, const SweepSpec& sweep);

/// Same process under two innovation laws (shared uniforms).
ExperimentReport cmd_compare_innovations(const ExperimentConfig& config, const InnovationSpec& a,
                                         const InnovationSpec& b);

/// Plain simulation; writes the per-path CSV.
ExperimentReport cmd_simulate(const ExperimentConfig& config);

/// Report as JSON (schema 1).
std::string report_json(const ExperimentReport& report);

/// `<experiment>__<variant>__<seed>.<ext>`
std::string artifact_name(const std::string& experiment, const std::string& variant,
                          const std::string& seed, const std::string& ext);

}  // namespace garchord::experiments
