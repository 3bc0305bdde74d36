#pragma once

#include "garchord/innovation.hpp"
#include "garchord/params.hpp"
#include "garchord/recursion.hpp"
#include "garchord/simulation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace garchord::experiments {

/// Malformed or infeasible configuration (exit status 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested comparison violates a model hypothesis (exit status 3).
class PremiseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// garch11 runs the GARCH(1,1) recursion in variance coordinates;
/// m1_custom / m2_custom pick a built-in recursion label in volatility or
/// variance coordinates.
enum class ModelKind { garch11, m1_custom, m2_custom };

const char* to_string(ModelKind m) noexcept;

/// Parameter overrides relative to the baseline.
struct Variant {
    std::string name;
    GarchParams params;
};

struct SweepSpec {
    std::string parameter;  // alpha0, alpha1 or beta1
    std::vector<double> values;
};

struct ExperimentConfig {
    ModelKind model = ModelKind::garch11;
    std::string recursion = "garch11";
    GarchParams params{0.2, 0.2, 0.2};
    InnovationSpec innovations = InnovationSpec::gaussian();
    /// Second law for compare-innovations.
    std::optional<InnovationSpec> innovations_b;
    InitialStateSpec init = InitialStateSpec::half_gaussian(1.0);
    std::size_t n_steps = 50;
    std::size_t n_paths = 100000;
    /// Required before any run; there is no default seed.
    std::optional<std::uint64_t> seed;
    std::vector<Variant> variants;
    std::optional<SweepSpec> sweep;
    std::string outputs = "out";
    bool allow_nonstationary = false;
    unsigned workers = 0;

    RecursionKind kind() const noexcept;
    /// Recursion for the given coefficients under this config's model.
    RecursionMap recursion_for(const GarchParams& p) const;
    /// Checked or unchecked coefficients depending on allow_nonstationary.
    GarchParams make_params(double alpha0, double alpha1, double beta1) const;
    std::uint64_t require_seed() const;
};

/// Smallest path count accepted by statistical experiments.
inline constexpr std::size_t kMinStatisticalPaths = 1000;

/// Parses the JSON config. Unknown keys, wrong types and infeasible values
/// throw ConfigError; asymmetric discrete innovations throw PremiseError.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string& path);

/// Innovation shorthand: gaussian[:scale], t<df>[:scale] (normalized),
/// laplace[:scale] (normalized).
InnovationSpec parse_innovation_shorthand(std::string_view text);

/// Baseline (0.2, 0.2, 0.2) with one-at-a-time 0.5 variants.
std::vector<Variant> default_fig1_variants(const ExperimentConfig& config);

}  // namespace garchord::experiments
