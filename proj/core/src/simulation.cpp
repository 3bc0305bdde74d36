#include "garchord/simulation.hpp"

#include "detail/format.hpp"
#include "garchord/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace garchord {

PathStream::PathStream(std::uint64_t seed, std::uint64_t path) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32),
                      0x9e3779b9u};
    engine_.seed(seq);
}

InitialStateSpec InitialStateSpec::constant(double s0) {
    if (!(s0 > 0.0) || !std::isfinite(s0)) {
        throw std::invalid_argument("InitialStateSpec: constant initial state must be positive");
    }
    return {Mode::constant, s0};
}

InitialStateSpec InitialStateSpec::half_gaussian(double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("InitialStateSpec: half-Gaussian scale must be positive");
    }
    return {Mode::half_gaussian, scale};
}

namespace {

std::string divergence_message(std::size_t path, std::size_t step, double state) {
    std::ostringstream os;
    os << "simulation diverged on path " << path << " at step " << step << " (state " << state
       << "); parameters may be non-stationary";
    return os.str();
}

}  // namespace

DivergenceError::DivergenceError(std::size_t path, std::size_t step, double state)
    : std::runtime_error(divergence_message(path, step, state)),
      path_(path),
      step_(step),
      state_(state) {}

PathBatch::PathBatch(std::size_t n_steps, std::size_t n_paths, std::uint64_t seed)
    : n_steps_(n_steps),
      n_paths_(n_paths),
      seed_(seed),
      sigma_(n_paths * (n_steps + 1)),
      x_(n_paths * (n_steps + 1)) {}

std::span<const double> PathBatch::sigma_row(std::size_t path) const {
    return {sigma_.data() + path * width(), width()};
}

std::span<const double> PathBatch::x_row(std::size_t path) const {
    return {x_.data() + path * width(), width()};
}

std::span<double> PathBatch::sigma_row(std::size_t path) {
    return {sigma_.data() + path * width(), width()};
}

std::span<double> PathBatch::x_row(std::size_t path) {
    return {x_.data() + path * width(), width()};
}

std::vector<double> PathBatch::x_column(std::size_t step) const {
    std::vector<double> out(n_paths_);
    for (std::size_t p = 0; p < n_paths_; ++p) {
        out[p] = x(p, step);
    }
    return out;
}

std::vector<double> PathBatch::sigma_column(std::size_t step) const {
    std::vector<double> out(n_paths_);
    for (std::size_t p = 0; p < n_paths_; ++p) {
        out[p] = sigma(p, step);
    }
    return out;
}

namespace {

struct Failure {
    std::size_t path;
    std::size_t step;
    double state;
};

bool valid_state(double s) { return std::isfinite(s) && s > 0.0; }

std::optional<Failure> simulate_range(const RecursionMap& recursion,
                                      const InnovationSpec& innovations,
                                      const InitialStateSpec& init, std::uint64_t seed,
                                      std::size_t begin, std::size_t end, PathBatch& batch) {
    const auto gauss = InnovationSpec::gaussian();
    const std::size_t n = batch.n_steps();
    for (std::size_t path = begin; path < end; ++path) {
        PathStream stream(seed, path);
        double state = init.value();
        if (init.mode() == InitialStateSpec::Mode::half_gaussian) {
            do {
                state = init.value() * std::abs(gauss.quantile(stream.uniform()));
            } while (!(state > 0.0));
        }
        auto sigma = batch.sigma_row(path);
        auto x = batch.x_row(path);
        for (std::size_t k = 0; k <= n; ++k) {
            if (!valid_state(state)) {
                return Failure{path, k, state};
            }
            const double eps = innovations.quantile(stream.uniform());
            sigma[k] = recursion.sigma_of(state);
            x[k] = sigma[k] * eps;
            if (k < n) {
                state = recursion(recursion.input_of(eps), state);
            }
        }
    }
    return std::nullopt;
}

void validate(const RecursionMap& recursion, const InnovationSpec& innovations,
              const InitialStateSpec& init) {
    double input_max = innovations.magnitude_quantile(0.999);
    if (recursion.kind() == RecursionKind::m2) {
        input_max *= input_max;
    }
    if (!(input_max > 0.0)) {
        input_max = 1.0;
    }
    const double typical =
        init.mode() == InitialStateSpec::Mode::constant ? init.value() : 3.3 * init.value();
    const double state_max = std::max(1.0, 4.0 * typical);
    const ShapeCheck check = check_shape(recursion, input_max, 0.0, state_max);
    if (!check.ok()) {
        throw std::invalid_argument("recursion '" + recursion.label() +
                                    "' is not increasing and componentwise convex: " +
                                    check.detail);
    }
}

}  // namespace

PathBatch simulate_paths(const RecursionMap& recursion, const InnovationSpec& innovations,
                         const InitialStateSpec& init, std::size_t n_steps, std::size_t n_paths,
                         std::uint64_t seed, const SimulationOptions& options) {
    if (n_steps < 1 || n_paths < 1) {
        throw std::invalid_argument("simulate_paths: n_steps and n_paths must be >= 1");
    }
    if (options.validate_recursion) {
        validate(recursion, innovations, init);
    }

    PathBatch batch(n_steps, n_paths, seed);
    unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(std::min<std::size_t>(n_paths, 256)));

    std::vector<std::optional<Failure>> failures(workers);
    if (workers == 1) {
        failures[0] = simulate_range(recursion, innovations, init, seed, 0, n_paths, batch);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        const std::size_t chunk = (n_paths + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = std::min(n_paths, w * chunk);
            const std::size_t end = std::min(n_paths, begin + chunk);
            threads.emplace_back([&, w, begin, end] {
                failures[w] = simulate_range(recursion, innovations, init, seed, begin, end, batch);
            });
        }
    }
    // Chunks are ordered by path, so the first recorded failure is the
    // lowest-index one regardless of worker count.
    for (const auto& f : failures) {
        if (f) {
            throw DivergenceError(f->path, f->step, f->state);
        }
    }
    return batch;
}

std::vector<double> logreturn_sums(const PathBatch& batch) {
    std::vector<double> out(batch.n_paths());
    for (std::size_t p = 0; p < batch.n_paths(); ++p) {
        double s = 0.0;
        for (double v : batch.x_row(p)) {
            s += v;
        }
        out[p] = s;
    }
    return out;
}

double closed_form_variance(const GarchParams& params, double sigma0_sq,
                            std::span<const double> eps_sq) {
    if (eps_sq.empty()) {
        throw std::invalid_argument("closed_form_variance: eps_sq must hold at least one value");
    }
    const double a1 = params.alpha1();
    const double b1 = params.beta1();
    // Running product over the most recent k coefficients, k = 1..n+1.
    double product = 1.0;
    double partial_sums = 0.0;
    const std::size_t len = eps_sq.size();
    for (std::size_t k = 1; k <= len; ++k) {
        product *= b1 + a1 * eps_sq[len - k];
        if (k < len) {
            partial_sums += product;
        }
    }
    return sigma0_sq * product + params.alpha0() * (1.0 + partial_sums);
}

double compose_g(const RecursionMap& recursion, double state0, std::span<const double> inputs) {
    double state = state0;
    for (double u : inputs) {
        state = recursion(u, state);
    }
    return state;
}

void write_batch_csv(std::ostream& out, const PathBatch& batch) {
    out << "path_id,S_n,sigma_n\n";
    const auto sums = logreturn_sums(batch);
    for (std::size_t p = 0; p < batch.n_paths(); ++p) {
        out << p << ',' << detail::format_double(sums[p]) << ','
            << detail::format_double(batch.sigma(p, batch.n_steps())) << '\n';
    }
}

}  // namespace garchord
