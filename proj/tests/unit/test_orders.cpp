#include "garchord/innovation.hpp"
#include "garchord/orders.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace garchord;

namespace {

EmpiricalDist draw(const InnovationSpec& spec, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> s(n);
    for (double& v : s) {
        double p = u(rng);
        while (p <= 0.0) {
            p = u(rng);
        }
        v = spec.quantile(p);
    }
    return EmpiricalDist(std::move(s));
}

}  // namespace

TEST_CASE("st order of shifted two-point laws") {
    const DiscreteDist a({{0.0, 0.5}, {1.0, 0.5}});
    const DiscreteDist b({{0.0, 0.2}, {1.0, 0.8}});
    const auto v = check_st(a, b);
    CHECK(v.direction == Direction::a_below_b);
    CHECK(v.margin == doctest::Approx(-0.3));
    CHECK(v.slack() == doctest::Approx(0.0));
    CHECK(v.consistent());
    const auto w = check_st(b, a);
    CHECK(w.direction == Direction::b_below_a);
    CHECK(w.margin == doctest::Approx(0.3));
    CHECK(check_st(a, a).direction == Direction::indistinguishable);
}

TEST_CASE("symmetric two-point vs three-point: incomparable in st, ordered in peakedness") {
    // {+-1} against {-2, 0, 2} with (.25, .5, .25): |A| = 1 while |B| is 0 or 2
    const auto a = DiscreteDist::symmetric_two_point(1.0);
    const auto b = DiscreteDist::symmetric_three_point(2.0, 0.25);
    CHECK(check_st(a, b).direction == Direction::incomparable);
    CHECK(check_st(a.abs(), b.abs()).direction == Direction::incomparable);
    const auto sq = check_icx(a.square(), b.square());
    CHECK(sq.direction == Direction::a_below_b);
    CHECK(check_cx(a, b).direction == Direction::a_below_b);
}

TEST_CASE("icx and cx on a dilation") {
    const auto base = DiscreteDist::symmetric_two_point(1.0);
    const DiscreteDist dilated({{-1.5, 0.25}, {-0.5, 0.25}, {0.5, 0.25}, {1.5, 0.25}});
    const auto v = check_icx(base, dilated);
    CHECK(v.direction == Direction::a_below_b);
    REQUIRE(v.curve("stop_loss_B") != nullptr);
    // SL_B(1) = 0.125 (reference script)
    const auto& grid = v.grid;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] == 1.0) {
            CHECK(v.curve("stop_loss_B")->values[i] == doctest::Approx(0.125));
        }
    }
    const auto c = check_cx(base, dilated);
    CHECK(c.direction == Direction::a_below_b);
    CHECK(c.value("mean_A").value() == doctest::Approx(0.0));
    const auto shifted = base.transformed([](double x) { return x + 0.1; });
    CHECK(check_cx(base, shifted).direction == Direction::incomparable);
}

TEST_CASE("verdicts are antisymmetric") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 30; ++t) {
        const DiscreteDist a({{u(rng), 0.3}, {u(rng), 0.7}});
        const DiscreteDist b({{u(rng), 0.5}, {u(rng), 0.25}, {u(rng), 0.25}});
        for (int r = 0; r < 3; ++r) {
            const auto ab = r == 0 ? check_st(a, b) : r == 1 ? check_icx(a, b) : check_cx(a, b);
            const auto ba = r == 0 ? check_st(b, a) : r == 1 ? check_icx(b, a) : check_cx(b, a);
            CHECK(ba.direction == flipped(ab.direction));
            CHECK(ba.margin == doctest::Approx(-ab.margin));
            CHECK(ab.consistent());
        }
    }
}

TEST_CASE("sign changes and single cut") {
    const auto a = DiscreteDist::symmetric_three_point(1.0, 0.1);
    const auto b = DiscreteDist::symmetric_three_point(1.0, 0.4);
    const auto sc = sign_changes(a.abs(), b.abs());
    CHECK(sc.count == 0);
    const std::vector<double> pts{-2.0, -1.0, 0.0, 1.0, 2.0};
    const auto g = DiscreteDist::uniform(pts);
    const auto f = DiscreteDist::symmetric_two_point(1.0);
    const auto cut = sign_changes(f, g);
    CHECK(cut.count == 3);
    CHECK(cut.signs == std::vector<int>{1, -1, 1, -1});
    CHECK(single_cut_direction(cut) == Direction::incomparable);
    SignChanges one;
    one.count = 1;
    one.signs = {1, -1};
    CHECK(single_cut_direction(one) == Direction::a_below_b);
    one.signs = {-1, 1};
    CHECK(single_cut_direction(one) == Direction::b_below_a);
    CHECK(single_cut_direction(SignChanges{}) == Direction::indistinguishable);
}

TEST_CASE("peakedness agrees with st of squares for symmetric laws") {
    const auto a = DiscreteDist::symmetric_three_point(1.0, 0.1);
    const auto b = DiscreteDist::symmetric_two_point(1.0);
    const auto v = check_peakedness(a, b);
    CHECK(v.direction == Direction::a_below_b);
    bool found = false;
    for (const auto& n : v.notes) {
        found = found || n == "st_squares: A_below_B";
    }
    CHECK(found);
}

TEST_CASE("kurtosis ordering of Gaussian and normalized t5") {
    const Distribution g(draw(InnovationSpec::gaussian(), 200000, 1));
    const Distribution t(draw(InnovationSpec::student_t(5), 200000, 2));
    CHECK(kurtosis_beta2(g) == doctest::Approx(3.0).epsilon(0.03));
    const auto v = check_kurtosis_order(g, t);
    CHECK(v.direction == Direction::a_below_b);
    CHECK(v.value("beta2_A").has_value());
    CHECK(kurtosis_beta2(DiscreteDist::symmetric_two_point(3.0)) == doctest::Approx(1.0));
}

TEST_CASE("stop-loss of squared innovations matches quadrature") {
    // reference values at k = 1 and 4 (tests/oracles/compute_oracles.py)
    const Distribution g(draw(InnovationSpec::gaussian(), 400000, 3));
    const Distribution t(draw(InnovationSpec::student_t(5), 400000, 4));
    CHECK(g.square().stop_loss(1.0) == doctest::Approx(0.4839414490382878).epsilon(0.01));
    CHECK(t.square().stop_loss(1.0) == doctest::Approx(0.551328895421792).epsilon(0.02));
    CHECK(g.square().stop_loss(4.0) == doctest::Approx(0.07946307436369338).epsilon(0.03));
}

TEST_CASE("empirical tolerance shrinks with n") {
    const Distribution small(EmpiricalDist(std::vector<double>(100, 1.0)));
    const Distribution big(EmpiricalDist(std::vector<double>(10000, 1.0)));
    CHECK(default_tolerance(small, small) == doctest::Approx(3.0 * std::sqrt(std::log(100.0) / 100.0)));
    CHECK(default_tolerance(big, small) == default_tolerance(small, small));
    CHECK(default_tolerance(big, big) < default_tolerance(small, small));
    CHECK(default_tolerance(DiscreteDist::point_mass(0.0), DiscreteDist::point_mass(1.0)) == 1e-12);
}

TEST_CASE("explicit grids are honoured") {
    GridSpec spec;
    spec.explicit_points = {0.5, -0.5};
    const auto v = check_st(DiscreteDist::symmetric_two_point(1.0), DiscreteDist::symmetric_two_point(2.0), spec);
    CHECK(v.grid.size() == 2);
    CHECK(v.direction == Direction::indistinguishable);
}
