#include "garchord/rng.hpp"
#include "garchord/simulation.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

using namespace garchord;

TEST_CASE("path streams are reproducible and in (0, 1)") {
    PathStream a(42, 7);
    PathStream b(42, 7);
    PathStream c(42, 8);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u > 0.0);
        CHECK(u < 1.0);
        differs = differs || u != c.uniform();
    }
    CHECK(differs);
}

TEST_CASE("closed-form variance matches reference iteration") {
    // eps^2 = (0.5, 2, 1.5) from sigma_0^2 = 1: 0.97875 (reference script)
    const std::vector<double> eps_sq{0.5, 2.0, 1.5};
    CHECK(closed_form_variance(GarchParams(0.1, 0.3, 0.5), 1.0, eps_sq) ==
          doctest::Approx(0.97875).epsilon(1e-14));
    CHECK_THROWS_AS(closed_form_variance(GarchParams(0.1, 0.3, 0.5), 2.5, {}), std::invalid_argument);
}

TEST_CASE("closed-form variance agrees with compose_g on random draws") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> unit(0.01, 0.45);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 200; ++trial) {
        const GarchParams p(unit(rng), unit(rng), unit(rng));
        const double s0 = 0.1 + 2.0 * unit(rng);
        std::vector<double> eps_sq(1 + trial % 60);
        for (double& v : eps_sq) {
            const double e = normal(rng);
            v = e * e;
        }
        const double iterated = compose_g(garch11_m2(p), s0, eps_sq);
        CHECK(std::abs(closed_form_variance(p, s0, eps_sq) - iterated) <= 1e-12 * iterated);
    }
}

TEST_CASE("simulation is identical across worker counts") {
    const auto rec = garch11_m2(GarchParams(0.2, 0.2, 0.2));
    const auto innov = InnovationSpec::gaussian();
    const auto init = InitialStateSpec::half_gaussian();
    SimulationOptions one;
    one.workers = 1;
    SimulationOptions many;
    many.workers = 7;
    const PathBatch a = simulate_paths(rec, innov, init, 20, 1001, 99, one);
    const PathBatch b = simulate_paths(rec, innov, init, 20, 1001, 99, many);
    CHECK(a == b);
    const PathBatch c = simulate_paths(rec, innov, init, 20, 1001, 100, one);
    CHECK_FALSE(a == c);
}

TEST_CASE("simulated paths follow the recursion") {
    const GarchParams p(0.1, 0.3, 0.5);
    const auto rec = garch11_m2(p);
    const PathBatch b = simulate_paths(rec, InnovationSpec::gaussian(), InitialStateSpec::constant(1.0), 10, 5, 3);
    for (std::size_t path = 0; path < 5; ++path) {
        CHECK(b.sigma(path, 0) == 1.0);
        for (std::size_t k = 0; k < 10; ++k) {
            const double e = b.x(path, k) / b.sigma(path, k);
            const double next = rec(e * e, b.sigma(path, k) * b.sigma(path, k));
            CHECK(b.sigma(path, k + 1) == doctest::Approx(std::sqrt(next)).epsilon(1e-14));
        }
    }
    const auto sums = logreturn_sums(b);
    double s = 0.0;
    for (double x : b.x_row(2)) {
        s += x;
    }
    CHECK(sums[2] == s);
}

TEST_CASE("common random numbers: one uniform stream under two laws") {
    const auto rec = garch11_m2(GarchParams(0.2, 0.2, 0.2));
    const auto init = InitialStateSpec::constant(1.0);
    const PathBatch g = simulate_paths(rec, InnovationSpec::gaussian(), init, 5, 50, 11);
    const PathBatch h = simulate_paths(rec, InnovationSpec::gaussian(1.5), init, 5, 50, 11);
    CHECK(h.x(3, 0) == doctest::Approx(1.5 * g.x(3, 0)));
}

TEST_CASE("divergence names the first failing path") {
    const RecursionMap blowup(RecursionKind::m2, [](double v, double s) { return 1e200 * (1.0 + v) * s; },
                              "blowup");
    SimulationOptions opts;
    opts.validate_recursion = false;
    opts.workers = 3;
    try {
        simulate_paths(blowup, InnovationSpec::gaussian(), InitialStateSpec::constant(1.0), 5, 9, 1, opts);
        FAIL("expected DivergenceError");
    } catch (const DivergenceError& e) {
        CHECK(e.path() == 0);
        CHECK(e.step() == 2);
    }
}

TEST_CASE("non-convex recursions are rejected before simulating") {
    const RecursionMap concave(RecursionKind::m2, [](double v, double s) { return std::sqrt(1.0 + v + s); },
                               "concave");
    CHECK_THROWS_AS(simulate_paths(concave, InnovationSpec::gaussian(), InitialStateSpec::constant(1.0), 5, 5, 1),
                    std::invalid_argument);
}

TEST_CASE("batch CSV export") {
    const PathBatch b = simulate_paths(garch11_m2(GarchParams(0.2, 0.2, 0.2)), InnovationSpec::gaussian(),
                                       InitialStateSpec::constant(1.0), 3, 4, 5);
    std::ostringstream out;
    write_batch_csv(out, b);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "path_id,S_n,sigma_n");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    CHECK(rows == 4);
}
