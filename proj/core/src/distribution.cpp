#include "garchord/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace garchord {

namespace {

constexpr double kMergeTol = 1e-12;
constexpr double kProbTol = 1e-12;

bool same_point(double a, double b) {
    return std::abs(a - b) <= kMergeTol * std::max(1.0, std::abs(a));
}

double power_of(double v, int power) {
    switch (power) {
        case 0: return 1.0;
        case 1: return v;
        case 2: return v * v;
        default: return std::pow(v, power);
    }
}

void require_power(int power) {
    if (power < 0 || power > 2) {
        throw std::invalid_argument("partial_moment: power must be 0, 1 or 2");
    }
}

}  // namespace

// ---------------------------------------------------------------- DiscreteDist

DiscreteDist::DiscreteDist(std::vector<Atom> atoms) {
    long double total = 0.0L;
    for (const Atom& a : atoms) {
        if (!std::isfinite(a.point) || !std::isfinite(a.prob)) {
            throw std::invalid_argument("DiscreteDist: atoms must be finite");
        }
        if (a.prob < 0.0) {
            throw std::invalid_argument("DiscreteDist: negative probability");
        }
        total += a.prob;
    }
    if (std::abs(static_cast<double>(total) - 1.0) > kProbTol) {
        throw std::invalid_argument("DiscreteDist: probabilities sum to " +
                                    std::to_string(static_cast<double>(total)) + ", expected 1");
    }
    std::erase_if(atoms, [](const Atom& a) { return a.prob == 0.0; });
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& l, const Atom& r) { return l.point < r.point; });

    atoms_.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (!atoms_.empty() && same_point(atoms_.back().point, a.point)) {
            atoms_.back().prob += a.prob;
        } else {
            atoms_.push_back(a);
        }
    }
    if (atoms_.empty()) {
        throw std::invalid_argument("DiscreteDist: empty support");
    }

    const std::size_t n = atoms_.size();
    cum_prob_.resize(n);
    tail_p0_.resize(n + 1);
    tail_p1_.resize(n + 1);
    tail_p2_.resize(n + 1);
    long double cum = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        cum += atoms_[i].prob;
        cum_prob_[i] = static_cast<double>(cum);
    }
    long double s0 = 0.0L;
    long double s1 = 0.0L;
    long double s2 = 0.0L;
    tail_p0_[n] = tail_p1_[n] = tail_p2_[n] = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        const long double p = atoms_[i].prob;
        const long double x = atoms_[i].point;
        s0 += p;
        s1 += p * x;
        s2 += p * x * x;
        tail_p0_[i] = static_cast<double>(s0);
        tail_p1_[i] = static_cast<double>(s1);
        tail_p2_[i] = static_cast<double>(s2);
    }
}

DiscreteDist DiscreteDist::point_mass(double x) { return DiscreteDist({{x, 1.0}}); }

DiscreteDist DiscreteDist::uniform(std::span<const double> points) {
    if (points.empty()) {
        throw std::invalid_argument("DiscreteDist::uniform: no points");
    }
    std::vector<Atom> atoms;
    atoms.reserve(points.size());
    const double w = 1.0 / static_cast<double>(points.size());
    for (double x : points) {
        atoms.push_back({x, w});
    }
    return DiscreteDist(std::move(atoms));
}

DiscreteDist DiscreteDist::symmetric_two_point(double a) {
    return DiscreteDist({{-a, 0.5}, {a, 0.5}});
}

DiscreteDist DiscreteDist::symmetric_three_point(double a, double p) {
    if (!(p > 0.0) || !(p <= 0.5)) {
        throw std::invalid_argument("symmetric_three_point: p must lie in (0, 0.5]");
    }
    return DiscreteDist({{-a, p}, {0.0, 1.0 - 2.0 * p}, {a, p}});
}

double DiscreteDist::cdf(double x) const {
    const auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                     [](double v, const Atom& a) { return v < a.point; });
    if (it == atoms_.begin()) {
        return 0.0;
    }
    return std::min(1.0, cum_prob_[static_cast<std::size_t>(it - atoms_.begin()) - 1]);
}

double DiscreteDist::partial_moment(double k, int power) const {
    require_power(power);
    const auto it = std::upper_bound(atoms_.begin(), atoms_.end(), k,
                                     [](double v, const Atom& a) { return v < a.point; });
    const auto i = static_cast<std::size_t>(it - atoms_.begin());
    const double s0 = tail_p0_[i];
    const double s1 = tail_p1_[i];
    switch (power) {
        case 0: return s0;
        case 1: return std::max(0.0, s1 - k * s0);
        default: return std::max(0.0, tail_p2_[i] - 2.0 * k * s1 + k * k * s0);
    }
}

double DiscreteDist::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("quantile: p must lie in [0, 1]");
    }
    const auto it = std::lower_bound(cum_prob_.begin(), cum_prob_.end(), p - 1e-15);
    if (it == cum_prob_.end()) {
        return atoms_.back().point;
    }
    return atoms_[static_cast<std::size_t>(it - cum_prob_.begin())].point;
}

double DiscreteDist::mean() const { return tail_p1_[0]; }

double DiscreteDist::raw_moment(int power) const {
    long double acc = 0.0L;
    for (const Atom& a : atoms_) {
        acc += static_cast<long double>(a.prob) * power_of(a.point, power);
    }
    return static_cast<double>(acc);
}

double DiscreteDist::central_moment(int power) const {
    const double m = mean();
    long double acc = 0.0L;
    for (const Atom& a : atoms_) {
        acc += static_cast<long double>(a.prob) * power_of(a.point - m, power);
    }
    return static_cast<double>(acc);
}

DiscreteDist DiscreteDist::transformed(const std::function<double(double)>& f) const {
    std::vector<Atom> out;
    out.reserve(atoms_.size());
    for (const Atom& a : atoms_) {
        out.push_back({f(a.point), a.prob});
    }
    return DiscreteDist(std::move(out));
}

DiscreteDist DiscreteDist::abs() const {
    return transformed([](double x) { return std::abs(x); });
}

DiscreteDist DiscreteDist::square() const {
    return transformed([](double x) { return x * x; });
}

DiscreteDist DiscreteDist::scaled(double factor) const {
    return transformed([factor](double x) { return factor * x; });
}

bool DiscreteDist::is_symmetric(double tol) const {
    const std::size_t n = atoms_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Atom& lo = atoms_[i];
        const Atom& hi = atoms_[n - 1 - i];
        if (std::abs(lo.point + hi.point) > tol * std::max(1.0, std::abs(hi.point)) ||
            std::abs(lo.prob - hi.prob) > tol) {
            return false;
        }
    }
    return true;
}

// --------------------------------------------------------------- EmpiricalDist

EmpiricalDist::EmpiricalDist(std::vector<double> sample) : sample_(std::move(sample)) {
    if (sample_.size() < 2) {
        throw std::invalid_argument("EmpiricalDist: need at least 2 observations");
    }
    for (double v : sample_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("EmpiricalDist: non-finite observation");
        }
    }
    std::sort(sample_.begin(), sample_.end());
    const std::size_t n = sample_.size();
    const long double w = 1.0L / static_cast<long double>(n);
    tail_p1_.resize(n + 1);
    tail_p2_.resize(n + 1);
    tail_p1_[n] = tail_p2_[n] = 0.0;
    long double s1 = 0.0L;
    long double s2 = 0.0L;
    for (std::size_t i = n; i-- > 0;) {
        const long double x = sample_[i];
        s1 += x * w;
        s2 += x * x * w;
        tail_p1_[i] = static_cast<double>(s1);
        tail_p2_[i] = static_cast<double>(s2);
    }
}

double EmpiricalDist::cdf(double x) const {
    const auto it = std::upper_bound(sample_.begin(), sample_.end(), x);
    return static_cast<double>(it - sample_.begin()) / static_cast<double>(sample_.size());
}

double EmpiricalDist::partial_moment(double k, int power) const {
    require_power(power);
    const auto i =
        static_cast<std::size_t>(std::upper_bound(sample_.begin(), sample_.end(), k) - sample_.begin());
    const double s0 = static_cast<double>(sample_.size() - i) / static_cast<double>(sample_.size());
    const double s1 = tail_p1_[i];
    switch (power) {
        case 0: return s0;
        case 1: return std::max(0.0, s1 - k * s0);
        default: return std::max(0.0, tail_p2_[i] - 2.0 * k * s1 + k * k * s0);
    }
}

double EmpiricalDist::quantile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("quantile: p must lie in [0, 1]");
    }
    // Type-7 (linear interpolation) sample quantile.
    const double h = p * static_cast<double>(sample_.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, sample_.size() - 1);
    return sample_[lo] + (h - static_cast<double>(lo)) * (sample_[hi] - sample_[lo]);
}

double EmpiricalDist::mean() const { return tail_p1_[0]; }

double EmpiricalDist::raw_moment(int power) const {
    long double acc = 0.0L;
    for (double x : sample_) {
        acc += power_of(x, power);
    }
    return static_cast<double>(acc / static_cast<long double>(sample_.size()));
}

double EmpiricalDist::central_moment(int power) const {
    const double m = mean();
    long double acc = 0.0L;
    for (double x : sample_) {
        acc += power_of(x - m, power);
    }
    return static_cast<double>(acc / static_cast<long double>(sample_.size()));
}

double EmpiricalDist::sample_variance() const {
    const auto n = static_cast<double>(sample_.size());
    return central_moment(2) * n / (n - 1.0);
}

EmpiricalDist EmpiricalDist::abs() const {
    std::vector<double> out(sample_.begin(), sample_.end());
    for (double& v : out) {
        v = std::abs(v);
    }
    return EmpiricalDist(std::move(out));
}

EmpiricalDist EmpiricalDist::square() const {
    std::vector<double> out(sample_.begin(), sample_.end());
    for (double& v : out) {
        v *= v;
    }
    return EmpiricalDist(std::move(out));
}

EmpiricalDist EmpiricalDist::scaled(double factor) const {
    std::vector<double> out(sample_.begin(), sample_.end());
    for (double& v : out) {
        v *= factor;
    }
    return EmpiricalDist(std::move(out));
}

// ---------------------------------------------------------------- Distribution

std::size_t Distribution::sample_size() const noexcept {
    if (const auto* e = empirical()) {
        return e->size();
    }
    return 0;
}

double Distribution::cdf(double x) const {
    return std::visit([x](const auto& d) { return d.cdf(x); }, impl_);
}

double Distribution::partial_moment(double k, int power) const {
    return std::visit([k, power](const auto& d) { return d.partial_moment(k, power); }, impl_);
}

double Distribution::quantile(double p) const {
    return std::visit([p](const auto& d) { return d.quantile(p); }, impl_);
}

double Distribution::mean() const {
    return std::visit([](const auto& d) { return d.mean(); }, impl_);
}

double Distribution::variance() const {
    return std::visit([](const auto& d) { return d.variance(); }, impl_);
}

double Distribution::central_moment(int power) const {
    return std::visit([power](const auto& d) { return d.central_moment(power); }, impl_);
}

double Distribution::min() const {
    return std::visit([](const auto& d) { return d.min(); }, impl_);
}

double Distribution::max() const {
    return std::visit([](const auto& d) { return d.max(); }, impl_);
}

std::vector<double> Distribution::points() const {
    if (const auto* d = exact()) {
        std::vector<double> out;
        out.reserve(d->size());
        for (const Atom& a : d->atoms()) {
            out.push_back(a.point);
        }
        return out;
    }
    const auto s = empirical()->sample();
    return {s.begin(), s.end()};
}

Distribution Distribution::abs() const {
    return std::visit([](const auto& d) { return Distribution(d.abs()); }, impl_);
}

Distribution Distribution::square() const {
    return std::visit([](const auto& d) { return Distribution(d.square()); }, impl_);
}

}  // namespace garchord
