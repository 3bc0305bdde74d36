#pragma once

#include "garchord/orders.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace garchord {

/// Weighted points in R^dim: an exact joint law (weights = probabilities)
/// or a sample (equal weights).
class MultiSample {
public:
    MultiSample(std::size_t dim, std::vector<double> rows, std::vector<double> weights);

    static MultiSample equal_weights(std::size_t dim, std::vector<double> rows);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return weights_.size(); }
    bool is_exact() const noexcept { return exact_; }
    void set_exact(bool exact) noexcept { exact_ = exact; }

    std::span<const double> row(std::size_t i) const { return {rows_.data() + i * dim_, dim_}; }
    double weight(std::size_t i) const { return weights_[i]; }

    /// Law of c . X as a 1-D distribution (exact or empirical).
    Distribution project(std::span<const double> c) const;

    /// Coordinate marginal.
    Distribution marginal(std::size_t coordinate) const;

private:
    std::size_t dim_;
    std::vector<double> rows_;
    std::vector<double> weights_;
    bool exact_ = true;
};

/// Ridge member psi(c . x - k) with psi(t) = (t^+)^power, power in {1, 2}.
struct RidgeFunction {
    std::vector<double> weights;
    double threshold = 0.0;
    int power = 1;

    double operator()(std::span<const double> x) const;
};

/// Generators of the test-function cones used for order checks.
///   convex_univariate:               x -> (x - k)^+ and (k - x)^+
///   increasing_convex_univariate:    x -> (x - k)^+
///   supermodular_convex_multivariate: x -> psi(c . x - k), c >= 0,
///                                     psi in {t^+, (t^+)^2}
/// Thresholds are drawn from the compared data at check time.
class TestFunctionFamily {
public:
    enum class Kind { convex_univariate, increasing_convex_univariate, supermodular_convex_multivariate };

    static TestFunctionFamily convex_univariate();
    static TestFunctionFamily increasing_convex_univariate();
    /// Default weight grid: e_i, prefix indicators 1{j <= i}, suffix
    /// indicators 1{j >= i}, de-duplicated (at most 3 * dim vectors).
    static TestFunctionFamily supermodular_convex(std::size_t dim);
    static TestFunctionFamily supermodular_convex(std::size_t dim,
                                                  std::vector<std::vector<double>> weights);

    Kind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<std::vector<double>>& weights() const noexcept { return weights_; }
    const std::vector<int>& powers() const noexcept { return powers_; }

    /// Members with the given thresholds (one per weight, power, threshold).
    std::vector<RidgeFunction> members(std::span<const double> thresholds) const;

    struct Validation {
        bool ok = true;
        std::size_t probes = 0;
        std::string detail;
    };

    /// Probes each member's class definition numerically: convexity along
    /// random segments (midpoint test), monotonicity for increasing kinds and
    /// the lattice inequality f(x) + f(y) <= f(x ^ y) + f(x v y).
    Validation validate(std::uint64_t seed, std::size_t probes_per_member = 64) const;

private:
    TestFunctionFamily(Kind kind, std::size_t dim, std::vector<std::vector<double>> weights,
                       std::vector<int> powers);

    Kind kind_;
    std::size_t dim_;
    std::vector<std::vector<double>> weights_;
    std::vector<int> powers_;
};

/// E[phi(A)] <= E[phi(B)] + tol for every family member. Gaps are measured in
/// units of sd(c . X)^power for samples (1 for exact laws) so one tolerance
/// serves all members. Thresholds: union of projected supports (exact) or 64
/// pooled quantiles of the projections.
OrderVerdict check_supermodular_cx(const MultiSample& a, const MultiSample& b,
                                   const TestFunctionFamily& family,
                                   std::optional<double> tol = std::nullopt);

}  // namespace garchord
