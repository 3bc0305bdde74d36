#include "garchord/oracle/symmetrize.hpp"

#include "garchord/oracle/sign_vectors.hpp"

#include <stdexcept>

namespace garchord::oracle {

namespace {

constexpr std::size_t kMaxSigns = 20;

}  // namespace

std::vector<double> symmetrize_h(const ScalarFn& phi, double a, double b,
                                 const std::vector<ScalarFn>& g, std::span<const double> u_grid) {
    if (g.size() > kMaxSigns) {
        throw std::invalid_argument("symmetrize_h: at most 20 functions g_i (2^m sign vectors)");
    }
    const SignVectorSet signs(g.size());
    std::vector<double> out(u_grid.size());
    std::vector<double> gv(g.size());
    for (std::size_t j = 0; j < u_grid.size(); ++j) {
        const double u = u_grid[j];
        for (std::size_t i = 0; i < g.size(); ++i) {
            gv[i] = g[i](u);
        }
        long double acc = 0.0L;
        signs.for_each([&](const std::vector<int>& p) {
            double arg = a + b * u;
            for (std::size_t i = 0; i < gv.size(); ++i) {
                arg += p[i] * gv[i];
            }
            acc += phi(arg);
        });
        out[j] = static_cast<double>(acc);
    }
    return out;
}

std::vector<double> symmetrize_h_multivariate(const VectorFn& phi, const std::vector<ScalarFn>& g,
                                              std::span<const double> u_grid) {
    if (g.size() > kMaxSigns) {
        throw std::invalid_argument(
            "symmetrize_h_multivariate: at most 20 functions g_i (2^m sign vectors)");
    }
    const SignVectorSet signs(g.size());
    std::vector<double> out(u_grid.size());
    std::vector<double> gv(g.size());
    std::vector<double> arg(g.size());
    for (std::size_t j = 0; j < u_grid.size(); ++j) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            gv[i] = g[i](u_grid[j]);
        }
        long double acc = 0.0L;
        signs.for_each([&](const std::vector<int>& p) {
            for (std::size_t i = 0; i < gv.size(); ++i) {
                arg[i] = p[i] * gv[i];
            }
            acc += phi(arg);
        });
        out[j] = static_cast<double>(acc);
    }
    return out;
}

ConvexityResult convexity_check(std::span<const double> values, double tol) {
    if (values.size() < 3) {
        throw std::invalid_argument("convexity_check: need at least 3 grid values");
    }
    ConvexityResult out;
    out.worst_second_difference = values[0] - 2.0 * values[1] + values[2];
    out.worst_index = 1;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        const double d2 = values[i - 1] - 2.0 * values[i] + values[i + 1];
        if (d2 < out.worst_second_difference) {
            out.worst_second_difference = d2;
            out.worst_index = i;
        }
    }
    out.pass = out.worst_second_difference >= -tol;
    return out;
}

}  // namespace garchord::oracle
