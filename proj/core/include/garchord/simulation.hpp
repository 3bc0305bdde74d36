#pragma once

#include "garchord/innovation.hpp"
#include "garchord/params.hpp"
#include "garchord/recursion.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace garchord {

/// Initial state in the recursion's coordinates (sigma_0 for m1,
/// sigma_0^2 for m2).
class InitialStateSpec {
public:
    enum class Mode { constant, half_gaussian };

    static InitialStateSpec constant(double s0);
    /// scale * |Z| with Z standard normal.
    static InitialStateSpec half_gaussian(double scale = 1.0);

    Mode mode() const noexcept { return mode_; }
    double value() const noexcept { return value_; }

private:
    InitialStateSpec(Mode mode, double value) : mode_(mode), value_(value) {}

    Mode mode_;
    double value_;
};

/// Thrown when a simulated state leaves (0, inf); identifies the first
/// offending path (lowest index) and step.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t path, std::size_t step, double state);

    std::size_t path() const noexcept { return path_; }
    std::size_t step() const noexcept { return step_; }
    double state() const noexcept { return state_; }

private:
    std::size_t path_;
    std::size_t step_;
    double state_;
};

/// Simulated (sigma_k, X_k) for k = 0..n_steps on every path, row-major by
/// path.
class PathBatch {
public:
    PathBatch(std::size_t n_steps, std::size_t n_paths, std::uint64_t seed);

    std::size_t n_steps() const noexcept { return n_steps_; }
    std::size_t n_paths() const noexcept { return n_paths_; }
    std::size_t width() const noexcept { return n_steps_ + 1; }
    std::uint64_t seed() const noexcept { return seed_; }

    double sigma(std::size_t path, std::size_t step) const { return sigma_[path * width() + step]; }
    double x(std::size_t path, std::size_t step) const { return x_[path * width() + step]; }

    std::span<const double> sigma_row(std::size_t path) const;
    std::span<const double> x_row(std::size_t path) const;
    std::span<double> sigma_row(std::size_t path);
    std::span<double> x_row(std::size_t path);

    /// Column k across paths.
    std::vector<double> x_column(std::size_t step) const;
    std::vector<double> sigma_column(std::size_t step) const;

    friend bool operator==(const PathBatch&, const PathBatch&) = default;

private:
    std::size_t n_steps_;
    std::size_t n_paths_;
    std::uint64_t seed_;
    std::vector<double> sigma_;
    std::vector<double> x_;
};

struct SimulationOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Grid-check the recursion shape before simulating.
    bool validate_recursion = true;
};

/// Simulates n_paths independent paths of X_k = sigma_k e_k for
/// k = 0..n_steps. Per path the initial-state draw (if random) comes first,
/// then e_0, ..., e_n, each from one uniform of the path's stream.
PathBatch simulate_paths(const RecursionMap& recursion, const InnovationSpec& innovations,
                         const InitialStateSpec& init, std::size_t n_steps, std::size_t n_paths,
                         std::uint64_t seed, const SimulationOptions& options = {});

/// S_n = X_0 + ... + X_n per path.
std::vector<double> logreturn_sums(const PathBatch& batch);

/// GARCH(1,1) variance after len(eps_sq) steps in closed form: with
/// eps_sq = (e_0^2, ..., e_n^2) returns sigma^2_{n+1}
///   = sigma0^2 prod_{i=0..n} c_i + alpha0 (1 + sum_{k=1..n} prod of the k most
///     recent c_i),  c_i = beta1 + alpha1 e_i^2.
double closed_form_variance(const GarchParams& params, double sigma0_sq,
                            std::span<const double> eps_sq);

/// Iterated application of the recursion: g(state0, inputs) with inputs in
/// the recursion's coordinates (|e_k| for m1, e_k^2 for m2).
double compose_g(const RecursionMap& recursion, double state0, std::span<const double> inputs);

/// CSV export: header `path_id,S_n,sigma_n`, one row per path.
void write_batch_csv(std::ostream& out, const PathBatch& batch);

}  // namespace garchord
