#include "garchord/innovation.hpp"
#include "garchord/kde.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace garchord;

TEST_CASE("Silverman bandwidth and density match reference values") {
    // sample 1..10: h = 1.719286404692283, f(5) = 0.09954407132040533
    std::vector<double> s;
    for (int i = 1; i <= 10; ++i) {
        s.push_back(i);
    }
    const double h = silverman_bandwidth(s);
    CHECK(h == doctest::Approx(1.719286404692283).epsilon(1e-12));
    const EmpiricalDist e(s);
    const std::vector<double> grid{5.0};
    CHECK(kde_evaluate(e, h, grid)[0] == doctest::Approx(0.09954407132040533).epsilon(1e-9));
}

TEST_CASE("pooled grid and bandwidth") {
    const EmpiricalDist a({0.0, 1.0, 2.0, 3.0});
    const EmpiricalDist b({10.0, 11.0, 12.0, 13.0});
    const std::vector<const EmpiricalDist*> both{&a, &b};
    const auto grid = even_grid(both, 5, 0.0, 1.0);
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 13.0);
    CHECK(pooled_silverman_bandwidth(both) > silverman_bandwidth(a.sample()));
}

TEST_CASE("density crossings need large samples") {
    const EmpiricalDist tiny({0.0, 1.0, 2.0});
    CHECK_THROWS_AS(density_crossings(tiny, tiny), std::invalid_argument);
}

TEST_CASE("Gaussian vs normalized t5 densities cross four times") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> g(200000);
    std::vector<double> t(200000);
    const auto gs = InnovationSpec::gaussian();
    const auto ts = InnovationSpec::student_t(5);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double p = 1e-12 + (1 - 2e-12) * u(rng);
        g[i] = gs.quantile(p);
        t[i] = ts.quantile(p);
    }
    const auto dc = density_crossings(EmpiricalDist(g), EmpiricalDist(t));
    CHECK(dc.count == 4);
    CHECK(dc.bandwidth > 0.0);
}
