#pragma once

#include "garchord/distribution.hpp"
#include "garchord/recursion.hpp"
#include "garchord/test_functions.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace garchord::oracle {

/// Largest outcome count enumerate() accepts.
inline constexpr double kMaxOutcomes = 2e6;

/// One branch of the tree, valid only during the visitor call.
struct OutcomeView {
    double prob;
    std::span<const double> x;      // X_0..X_n
    std::span<const double> sigma;  // sigma_0..sigma_n
    double sigma_next;              // sigma_{n+1}
    double sum;                     // S_n = X_0 + ... + X_n
};

/// Materialized copy of an outcome.
struct TreeOutcome {
    double prob;
    std::vector<double> x;
    std::vector<double> sigma;
    double sigma_next;
    double sum;
};

enum class Quantity { x, abs_x, x_squared, sigma, sigma_squared, sum };

/// Every innovation path of a recursion driven by finite-support laws.
///
/// Step k draws e_k from innovations[k]; X_k = sigma_k e_k and the state
/// advances through the recursion. The initial state (sigma_0 for m1,
/// sigma_0^2 for m2) may itself be a finite law. Outcomes are visited in
/// prefix-lexicographic order (initial state, e_0, e_1, ...), so every
/// reduction over them is bit-stable.
class ExactPathTree {
public:
    ExactPathTree(RecursionMap recursion, DiscreteDist initial_state,
                  std::vector<DiscreteDist> innovations);

    /// Same law at every step e_0..e_n.
    static ExactPathTree iid(RecursionMap recursion, DiscreteDist initial_state,
                             const DiscreteDist& innovation, std::size_t n);

    /// Copy with the law at step k replaced.
    ExactPathTree with_innovation(std::size_t k, DiscreteDist law) const;

    std::size_t depth() const noexcept { return innovations_.size() - 1; }
    double outcome_count() const noexcept;
    const RecursionMap& recursion() const noexcept { return recursion_; }

    /// Throws std::length_error beyond kMaxOutcomes.
    void for_each(const std::function<void(const OutcomeView&)>& visit) const;
    std::vector<TreeOutcome> enumerate() const;

    double expectation(const std::function<double(const OutcomeView&)>& phi) const;

    /// Exact law of a quantity. `index` is the step for x/sigma quantities;
    /// sigma and sigma_squared accept index n + 1. Ignored for sum.
    DiscreteDist marginal(Quantity q, std::size_t index = 0) const;

    /// Appends weight * prob atoms of a quantity (for mixtures over
    /// parameter laws).
    void append_marginal(Quantity q, std::size_t index, double weight,
                         std::vector<Atom>& out) const;

    /// Joint law of (X_0, ..., X_n).
    MultiSample joint_x() const;
    void append_joint_x(double weight, std::vector<double>& rows,
                        std::vector<double>& weights) const;

private:
    RecursionMap recursion_;
    DiscreteDist initial_;
    std::vector<DiscreteDist> innovations_;
};

}  // namespace garchord::oracle
