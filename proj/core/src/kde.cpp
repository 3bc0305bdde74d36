#include "garchord/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace garchord {

namespace {

constexpr std::size_t kMinCrossingSample = 1000;
constexpr std::size_t kRecommendedSample = 10000;
constexpr double kTruncation = 6.0;

double quantile_sorted(std::span<const double> s, double p) {
    const double h = p * static_cast<double>(s.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, s.size() - 1);
    return s[lo] + (h - static_cast<double>(lo)) * (s[hi] - s[lo]);
}

std::vector<double> pool(std::span<const EmpiricalDist* const> samples) {
    std::vector<double> out;
    for (const EmpiricalDist* e : samples) {
        const auto s = e->sample();
        std::vector<double> merged;
        merged.reserve(out.size() + s.size());
        std::merge(out.begin(), out.end(), s.begin(), s.end(), std::back_inserter(merged));
        out.swap(merged);
    }
    return out;
}

}  // namespace

double silverman_bandwidth(std::span<const double> s) {
    if (s.size() < 2) {
        throw std::invalid_argument("silverman_bandwidth: need at least 2 observations");
    }
    const auto n = static_cast<double>(s.size());
    long double sum = 0.0L;
    long double sum2 = 0.0L;
    for (double v : s) {
        sum += v;
        sum2 += static_cast<long double>(v) * v;
    }
    const double mean = static_cast<double>(sum / n);
    const double var = std::max(0.0, static_cast<double>(sum2 / n) - mean * mean) * n / (n - 1.0);
    const double sd = std::sqrt(var);
    const double iqr = quantile_sorted(s, 0.75) - quantile_sorted(s, 0.25);
    double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
    if (!(spread > 0.0)) {
        spread = 1.0;
    }
    return 0.9 * spread * std::pow(n, -0.2);
}

double pooled_silverman_bandwidth(std::span<const EmpiricalDist* const> samples) {
    const auto pooled = pool(samples);
    return silverman_bandwidth(pooled);
}

std::vector<double> kde_evaluate(const EmpiricalDist& sample, double bandwidth,
                                 std::span<const double> grid) {
    if (!(bandwidth > 0.0)) {
        throw std::invalid_argument("kde_evaluate: bandwidth must be positive");
    }
    const auto s = sample.sample();
    const double norm =
        1.0 / (static_cast<double>(s.size()) * bandwidth * std::sqrt(2.0 * std::numbers::pi));
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        const auto lo = std::lower_bound(s.begin(), s.end(), x - kTruncation * bandwidth);
        const auto hi = std::upper_bound(lo, s.end(), x + kTruncation * bandwidth);
        double acc = 0.0;
        for (auto it = lo; it != hi; ++it) {
            const double z = (x - *it) / bandwidth;
            acc += std::exp(-0.5 * z * z);
        }
        out[i] = acc * norm;
    }
    return out;
}

std::vector<double> even_grid(std::span<const EmpiricalDist* const> samples, std::size_t points,
                              double lo_q, double hi_q) {
    if (points < 2) {
        throw std::invalid_argument("even_grid: need at least 2 points");
    }
    const auto pooled = pool(samples);
    const double lo = quantile_sorted(pooled, lo_q);
    const double hi = quantile_sorted(pooled, hi_q);
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    return grid;
}

DensityCrossings density_crossings(const EmpiricalDist& a, const EmpiricalDist& b,
                                   const KdeOptions& options) {
    if (a.size() < kMinCrossingSample || b.size() < kMinCrossingSample) {
        throw std::invalid_argument("density_crossings: need at least 1000 observations per sample");
    }
    DensityCrossings out;
    const EmpiricalDist* both[] = {&a, &b};
    out.bandwidth = options.bandwidth.value_or(pooled_silverman_bandwidth(both));
    out.grid = options.explicit_grid.empty() ? even_grid(both, options.points)
                                             : options.explicit_grid;
    out.density_a = kde_evaluate(a, out.bandwidth, out.grid);
    out.density_b = kde_evaluate(b, out.bandwidth, out.grid);
    out.notes.emplace_back("advisory: crossing counts depend on the kernel bandwidth");
    if (a.size() < kRecommendedSample || b.size() < kRecommendedSample) {
        out.notes.emplace_back("sample below the recommended 10^4 observations");
    }

    // Pointwise KDE variance ~ f(x) R(K) / (n h), R(K) = 1 / (2 sqrt(pi)).
    const double rk = 0.5 / std::sqrt(std::numbers::pi);
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    int last = 0;
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
        const double fa = out.density_a[i];
        const double fb = out.density_b[i];
        const double se = std::sqrt((fa / na + fb / nb) * rk / out.bandwidth);
        const double gap = fa - fb;
        const int s = gap > 3.0 * se ? 1 : (gap < -3.0 * se ? -1 : 0);
        if (s == 0 || s == last) {
            continue;
        }
        if (last != 0) {
            ++out.count;
            out.locations.push_back(out.grid[i]);
        }
        out.signs.push_back(s);
        last = s;
    }
    return out;
}

}  // namespace garchord
