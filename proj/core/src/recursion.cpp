#include "garchord/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace garchord {

const char* to_string(RecursionKind kind) noexcept {
    return kind == RecursionKind::m1 ? "m1" : "m2";
}

RecursionMap::RecursionMap(RecursionKind kind, Update f, std::string label)
    : kind_(kind), f_(std::move(f)), label_(std::move(label)) {
    if (!f_) {
        throw std::invalid_argument("RecursionMap: empty update function");
    }
}

double RecursionMap::input_of(double innovation) const noexcept {
    return kind_ == RecursionKind::m1 ? std::abs(innovation) : innovation * innovation;
}

double RecursionMap::sigma_of(double state) const noexcept {
    return kind_ == RecursionKind::m1 ? state : std::sqrt(state);
}

double RecursionMap::state_of(double sigma) const noexcept {
    return kind_ == RecursionKind::m1 ? sigma : sigma * sigma;
}

RecursionMap garch11_m1(const GarchParams& p) {
    const double a0 = p.alpha0();
    const double a1 = p.alpha1();
    const double b1 = p.beta1();
    return RecursionMap(
        RecursionKind::m1,
        [a0, a1, b1](double u, double s) { return std::sqrt(a0 + (a1 * u * u + b1) * s * s); },
        "garch11");
}

RecursionMap garch11_m2(const GarchParams& p) {
    const double a0 = p.alpha0();
    const double a1 = p.alpha1();
    const double b1 = p.beta1();
    return RecursionMap(
        RecursionKind::m2, [a0, a1, b1](double v, double s) { return a0 + (a1 * v + b1) * s; },
        "garch11");
}

RecursionMap avgarch_m1(const GarchParams& p) {
    const double a0 = p.alpha0();
    const double a1 = p.alpha1();
    const double b1 = p.beta1();
    return RecursionMap(
        RecursionKind::m1, [a0, a1, b1](double u, double s) { return a0 + (a1 * u + b1) * s; },
        "avgarch");
}

RecursionMap arch1_m2(const GarchParams& p) {
    const double a0 = p.alpha0();
    const double a1 = p.alpha1();
    return RecursionMap(
        RecursionKind::m2, [a0, a1](double v, double s) { return a0 + a1 * v * s; }, "arch1");
}

RecursionMap make_recursion(RecursionKind kind, const std::string& label, const GarchParams& p) {
    if (label == "garch11") {
        return kind == RecursionKind::m1 ? garch11_m1(p) : garch11_m2(p);
    }
    if (label == "avgarch" && kind == RecursionKind::m1) {
        return avgarch_m1(p);
    }
    if (label == "arch1" && kind == RecursionKind::m2) {
        return arch1_m2(p);
    }
    throw std::invalid_argument("unknown recursion '" + label + "' for model " + to_string(kind) +
                                " (m1: garch11, avgarch; m2: garch11, arch1)");
}

ShapeCheck check_shape(const RecursionMap& map, double input_max, double state_min,
                       double state_max, int points, double tol) {
    if (points < 3 || !(input_max > 0.0) || !(state_max > state_min) || state_min < 0.0) {
        throw std::invalid_argument("check_shape: invalid grid");
    }
    const auto n = static_cast<std::size_t>(points);
    std::vector<double> u(n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        u[i] = t * input_max;
        s[i] = state_min + t * (state_max - state_min);
    }
    std::vector<double> f(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            f[i * n + j] = map(u[i], s[j]);
        }
    }

    ShapeCheck out;
    auto note = [&](const char* what, std::size_t i, std::size_t j, double d) {
        if (out.detail.empty()) {
            std::ostringstream os;
            os << what << " at input=" << u[i] << ", state=" << s[j] << " (difference " << d << ")";
            out.detail = os.str();
        }
    };
    auto value = [&](std::size_t i, std::size_t j) { return f[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double bound = tol * std::max(1.0, std::abs(value(i, j)));
            if (!std::isfinite(value(i, j))) {
                out.increasing = false;
                note("non-finite value", i, j, value(i, j));
                continue;
            }
            // Forward differences in each argument.
            if (i + 1 < n) {
                const double d = value(i + 1, j) - value(i, j);
                out.worst_first_difference = std::min(out.worst_first_difference, d);
                if (d < -bound) {
                    out.increasing = false;
                    note("decreasing in input", i, j, d);
                }
            }
            if (j + 1 < n) {
                const double d = value(i, j + 1) - value(i, j);
                out.worst_first_difference = std::min(out.worst_first_difference, d);
                if (d < -bound) {
                    out.increasing = false;
                    note("decreasing in state", i, j, d);
                }
            }
            // Second differences in each argument.
            if (i > 0 && i + 1 < n) {
                const double d2 = value(i - 1, j) - 2.0 * value(i, j) + value(i + 1, j);
                out.worst_second_difference = std::min(out.worst_second_difference, d2);
                if (d2 < -bound) {
                    out.componentwise_convex = false;
                    note("concave in input", i, j, d2);
                }
            }
            if (j > 0 && j + 1 < n) {
                const double d2 = value(i, j - 1) - 2.0 * value(i, j) + value(i, j + 1);
                out.worst_second_difference = std::min(out.worst_second_difference, d2);
                if (d2 < -bound) {
                    out.componentwise_convex = false;
                    note("concave in state", i, j, d2);
                }
            }
        }
    }
    return out;
}

}  // namespace garchord
