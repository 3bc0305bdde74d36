#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <variant>
#include <vector>

namespace garchord {

struct Atom {
    double point;
    double prob;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite-support law with atoms sorted by point.
///
/// Construction sorts the atoms, drops zero-probability entries and merges
/// points that agree to 1e-12 (relative), so enumerated outcomes that differ
/// only by rounding collapse onto one atom. Probabilities must be
/// nonnegative and sum to 1 within 1e-12.
class DiscreteDist {
public:
    explicit DiscreteDist(std::vector<Atom> atoms);

    static DiscreteDist point_mass(double x);
    /// Equiprobable law on the given points (duplicates accumulate mass).
    static DiscreteDist uniform(std::span<const double> points);
    /// {-a, +a} with probability 1/2 each.
    static DiscreteDist symmetric_two_point(double a);
    /// {-a, 0, +a} with probabilities (p, 1 - 2p, p).
    static DiscreteDist symmetric_three_point(double a, double p);

    std::span<const Atom> atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    double min() const noexcept { return atoms_.front().point; }
    double max() const noexcept { return atoms_.back().point; }

    /// Right-continuous CDF P(X <= x).
    double cdf(double x) const;
    /// E[((X - k)^+)^power] for power in {0, 1, 2}; power 0 is P(X > k).
    double partial_moment(double k, int power) const;
    double stop_loss(double k) const { return partial_moment(k, 1); }
    double quantile(double p) const;

    double mean() const;
    double raw_moment(int power) const;
    double central_moment(int power) const;
    double variance() const { return central_moment(2); }

    DiscreteDist abs() const;
    DiscreteDist square() const;
    DiscreteDist scaled(double factor) const;
    DiscreteDist transformed(const std::function<double(double)>& f) const;

    /// Support closed under negation with matching probabilities (to tol).
    bool is_symmetric(double tol = 1e-12) const;

private:
    std::vector<Atom> atoms_;
    std::vector<double> cum_prob_;  // P(X <= atoms_[i].point)
    std::vector<double> tail_p0_;   // sum_{j >= i} p_j
    std::vector<double> tail_p1_;   // sum_{j >= i} p_j x_j
    std::vector<double> tail_p2_;   // sum_{j >= i} p_j x_j^2
};

/// Sorted Monte Carlo sample with the empirical (equal-weight) law.
class EmpiricalDist {
public:
    explicit EmpiricalDist(std::vector<double> sample);

    std::span<const double> sample() const noexcept { return sample_; }
    std::size_t size() const noexcept { return sample_.size(); }
    double min() const noexcept { return sample_.front(); }
    double max() const noexcept { return sample_.back(); }

    double cdf(double x) const;
    double partial_moment(double k, int power) const;
    double stop_loss(double k) const { return partial_moment(k, 1); }
    double quantile(double p) const;

    double mean() const;
    double raw_moment(int power) const;
    double central_moment(int power) const;
    double variance() const { return central_moment(2); }
    /// Unbiased (n - 1) sample variance.
    double sample_variance() const;

    EmpiricalDist abs() const;
    EmpiricalDist square() const;
    EmpiricalDist scaled(double factor) const;

private:
    std::vector<double> sample_;
    std::vector<double> tail_p1_;  // sum_{j >= i} x_j / n
    std::vector<double> tail_p2_;  // sum_{j >= i} x_j^2 / n
};

/// Either an exact finite-support law or an empirical sample, behind one
/// comparison interface.
class Distribution {
public:
    Distribution(DiscreteDist d) : impl_(std::move(d)) {}  // NOLINT(google-explicit-constructor)
    Distribution(EmpiricalDist d) : impl_(std::move(d)) {}  // NOLINT(google-explicit-constructor)

    bool is_exact() const noexcept { return std::holds_alternative<DiscreteDist>(impl_); }
    const DiscreteDist* exact() const noexcept { return std::get_if<DiscreteDist>(&impl_); }
    const EmpiricalDist* empirical() const noexcept { return std::get_if<EmpiricalDist>(&impl_); }

    /// Sample size; 0 for exact laws.
    std::size_t sample_size() const noexcept;

    double cdf(double x) const;
    double partial_moment(double k, int power) const;
    double stop_loss(double k) const { return partial_moment(k, 1); }
    double quantile(double p) const;
    double mean() const;
    double variance() const;
    double central_moment(int power) const;
    double min() const;
    double max() const;

    /// Support points (exact) or sorted sample (empirical).
    std::vector<double> points() const;

    Distribution abs() const;
    Distribution square() const;

private:
    std::variant<DiscreteDist, EmpiricalDist> impl_;
};

}  // namespace garchord
