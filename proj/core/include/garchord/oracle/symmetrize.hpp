#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace garchord::oracle {

using ScalarFn = std::function<double(double)>;
using VectorFn = std::function<double(std::span<const double>)>;

/// h(u) = sum over p in {-1,1}^m of phi(a + b u + sum_i p_i g_i(u)),
/// evaluated on u_grid. Throws std::invalid_argument for m > 20.
std::vector<double> symmetrize_h(const ScalarFn& phi, double a, double b,
                                 const std::vector<ScalarFn>& g, std::span<const double> u_grid);

/// Multivariate counterpart: h(u) = sum over p in {-1,1}^m of
/// phi(p_1 g_1(u), ..., p_m g_m(u)). Throws for m > 20.
std::vector<double> symmetrize_h_multivariate(const VectorFn& phi, const std::vector<ScalarFn>& g,
                                              std::span<const double> u_grid);

struct ConvexityResult {
    bool pass = true;
    double worst_second_difference = 0.0;
    std::size_t worst_index = 0;  // centre of the worst triple
};

/// Second differences v[i-1] - 2 v[i] + v[i+1] on an evenly spaced grid;
/// passes when all are >= -tol. Needs at least 3 values.
ConvexityResult convexity_check(std::span<const double> values, double tol = 1e-9);

}  // namespace garchord::oracle
