#pragma once

#include "garchord/distribution.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace garchord {

/// Silverman's rule 0.9 min(sd, IQR / 1.34) n^(-1/5) on a sorted sample.
double silverman_bandwidth(std::span<const double> sorted_sample);

/// Bandwidth from the pooled samples (so several curves share one kernel).
double pooled_silverman_bandwidth(std::span<const EmpiricalDist* const> samples);

/// Gaussian-kernel density estimate evaluated on `grid`; the kernel is
/// truncated at 6 bandwidths.
std::vector<double> kde_evaluate(const EmpiricalDist& sample, double bandwidth,
                                 std::span<const double> grid);

/// `points` evenly spaced values between the pooled lo_q and hi_q quantiles.
std::vector<double> even_grid(std::span<const EmpiricalDist* const> samples,
                              std::size_t points = 512, double lo_q = 0.001, double hi_q = 0.999);

struct KdeOptions {
    std::optional<double> bandwidth;  // default: pooled Silverman
    std::size_t points = 512;
    std::vector<double> explicit_grid;
};

/// Crossings of two kernel density estimates. Advisory only: the count
/// depends on the bandwidth. Gaps within 3 pointwise standard errors are
/// treated as ties.
struct DensityCrossings {
    int count = 0;
    std::vector<double> locations;
    std::vector<int> signs;  // collapsed sign sequence of f_A - f_B
    std::vector<double> grid;
    std::vector<double> density_a;
    std::vector<double> density_b;
    double bandwidth = 0.0;
    std::vector<std::string> notes;
};

/// Throws std::invalid_argument when either sample has fewer than 1000
/// observations.
DensityCrossings density_crossings(const EmpiricalDist& a, const EmpiricalDist& b,
                                   const KdeOptions& options = {});

}  // namespace garchord
