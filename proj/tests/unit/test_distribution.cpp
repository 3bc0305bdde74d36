#include "garchord/distribution.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace garchord;

TEST_CASE("construction sorts, merges and validates atoms") {
    const DiscreteDist d({{2.0, 0.25}, {-1.0, 0.5}, {2.0 + 1e-15, 0.25}, {5.0, 0.0}});
    REQUIRE(d.size() == 2);
    CHECK(d.atoms()[0].point == -1.0);
    CHECK(d.atoms()[1].prob == doctest::Approx(0.5));
    CHECK_THROWS_AS(DiscreteDist({{1.0, 0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteDist({{1.0, 1.5}, {2.0, -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(DiscreteDist(std::vector<Atom>{}), std::invalid_argument);
}

TEST_CASE("cdf, stop-loss and moments of small laws") {
    const auto two = DiscreteDist::symmetric_two_point(1.0);
    CHECK(two.cdf(-1.0) == 0.5);
    CHECK(two.cdf(-1.0 - 1e-9) == 0.0);
    CHECK(two.stop_loss(0.0) == doctest::Approx(0.5));
    // integral of P(X > t) over (0, inf) is 1/2 for {-1, 1}; of P(X^2 > t) is 1
    CHECK(two.square().stop_loss(0.0) == doctest::Approx(1.0));
    CHECK(two.partial_moment(0.0, 2) == doctest::Approx(0.5));
    CHECK(two.partial_moment(0.5, 0) == doctest::Approx(0.5));

    const auto three = DiscreteDist::symmetric_three_point(std::sqrt(2.0), 0.25);
    CHECK(three.stop_loss(0.0) == doctest::Approx(std::sqrt(2.0) / 4.0).epsilon(1e-15));
    CHECK(three.variance() == doctest::Approx(1.0));
    CHECK(three.central_moment(4) == doctest::Approx(2.0));
    CHECK(three.is_symmetric());
    CHECK(three.quantile(0.25) == -std::sqrt(2.0));
    CHECK(three.quantile(0.5) == 0.0);
    CHECK_FALSE(DiscreteDist({{-1.0, 0.4}, {1.0, 0.6}}).is_symmetric());
}

TEST_CASE("transforms") {
    const auto three = DiscreteDist::symmetric_three_point(2.0, 0.25);
    const auto a = three.abs();
    CHECK(a.size() == 2);
    CHECK(a.cdf(0.0) == doctest::Approx(0.5));
    CHECK(three.square().max() == 4.0);
    CHECK(three.scaled(0.5).max() == 1.0);
    CHECK(three.transformed([](double x) { return x + 1.0; }).mean() == doctest::Approx(1.0));
}

TEST_CASE("empirical distribution") {
    const EmpiricalDist e({4.0, 1.0, 3.0, 2.0});
    CHECK(e.min() == 1.0);
    CHECK(e.cdf(2.0) == 0.5);
    CHECK(e.mean() == 2.5);
    CHECK(e.variance() == doctest::Approx(1.25));
    CHECK(e.sample_variance() == doctest::Approx(5.0 / 3.0));
    // type-7 quantile
    CHECK(e.quantile(0.5) == 2.5);
    CHECK(e.quantile(0.25) == doctest::Approx(1.75));
    CHECK(e.stop_loss(2.0) == doctest::Approx((1.0 + 2.0) / 4.0));
    CHECK(e.partial_moment(2.0, 2) == doctest::Approx((1.0 + 4.0) / 4.0));
    CHECK_THROWS_AS(EmpiricalDist({1.0}), std::invalid_argument);
}

TEST_CASE("distribution wrapper forwards to either law") {
    const Distribution d(DiscreteDist::symmetric_two_point(1.0));
    const Distribution e(EmpiricalDist({-1.0, 1.0, -1.0, 1.0}));
    CHECK(d.is_exact());
    CHECK_FALSE(e.is_exact());
    CHECK(d.sample_size() == 0);
    CHECK(e.sample_size() == 4);
    for (double k : {-2.0, -1.0, 0.0, 0.5, 1.0}) {
        CHECK(d.cdf(k) == doctest::Approx(e.cdf(k)));
        CHECK(d.stop_loss(k) == doctest::Approx(e.stop_loss(k)));
    }
    CHECK(d.square().points().size() == 1);
    CHECK(e.abs().min() == 1.0);
}
