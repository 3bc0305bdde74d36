#include "garchord/test_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace garchord;

TEST_CASE("family generators pass their own class probes") {
    CHECK(TestFunctionFamily::convex_univariate().validate(1).ok);
    CHECK(TestFunctionFamily::increasing_convex_univariate().validate(2).ok);
    const auto fam = TestFunctionFamily::supermodular_convex(4);
    CHECK(fam.weights().size() <= 12);
    const auto v = fam.validate(3);
    CHECK(v.ok);
    CHECK(v.probes > 0);
    CHECK_THROWS_AS(TestFunctionFamily::supermodular_convex(2, {{1.0, -1.0}}), std::invalid_argument);
}

TEST_CASE("ridge members") {
    const RidgeFunction f{{1.0, 2.0}, 1.0, 2};
    const std::vector<double> x{1.0, 1.0};
    CHECK(f(x) == doctest::Approx(4.0));
    const std::vector<double> y{0.0, 0.0};
    CHECK(f(y) == 0.0);
}

TEST_CASE("projection of a weighted sample") {
    const MultiSample m(2, {1.0, 2.0, 3.0, 4.0}, {0.25, 0.75});
    const std::vector<double> c{1.0, 1.0};
    const Distribution d = m.project(c);
    REQUIRE(d.is_exact());
    CHECK(d.mean() == doctest::Approx(0.25 * 3.0 + 0.75 * 7.0));
    CHECK(m.marginal(1).max() == 4.0);
    const auto eq = MultiSample::equal_weights(1, {1.0, 2.0, 3.0});
    CHECK_FALSE(eq.is_exact());
}

TEST_CASE("comonotone coupling dominates independent coupling") {
    // (X, Y) iid uniform on {-1, 1} against X = Y: same marginals, more
    // positive dependence
    const MultiSample indep(2, {-1, -1, -1, 1, 1, -1, 1, 1}, {0.25, 0.25, 0.25, 0.25});
    const MultiSample comono(2, {-1, -1, 1, 1}, {0.5, 0.5});
    const auto fam = TestFunctionFamily::supermodular_convex(2);
    CHECK(check_supermodular_cx(indep, comono, fam).direction == Direction::a_below_b);
    CHECK(check_supermodular_cx(comono, indep, fam).direction == Direction::b_below_a);
    CHECK_THROWS_AS(check_supermodular_cx(indep, comono, TestFunctionFamily::convex_univariate()),
                    std::invalid_argument);
}
