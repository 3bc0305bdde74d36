#pragma once

#include "garchord/params.hpp"

#include <functional>
#include <string>

namespace garchord {

/// Coordinates the recursion runs in.
///   m1: state is the volatility sigma, input is |e|.
///   m2: state is the variance sigma^2, input is e^2.
enum class RecursionKind { m1, m2 };

const char* to_string(RecursionKind kind) noexcept;

/// Increasing, componentwise convex update state' = f(input, state).
class RecursionMap {
public:
    using Update = std::function<double(double input, double state)>;

    RecursionMap(RecursionKind kind, Update f, std::string label);

    RecursionKind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }

    double operator()(double input, double state) const { return f_(input, state); }

    /// Maps an innovation draw to this recursion's input coordinate.
    double input_of(double innovation) const noexcept;
    /// Volatility corresponding to a state value.
    double sigma_of(double state) const noexcept;
    /// State value corresponding to a volatility.
    double state_of(double sigma) const noexcept;

private:
    RecursionKind kind_;
    Update f_;
    std::string label_;
};

/// sigma_{n+1} = sqrt(alpha0 + (alpha1 u^2 + beta1) sigma_n^2).
RecursionMap garch11_m1(const GarchParams& p);
/// sigma^2_{n+1} = alpha0 + alpha1 v sigma^2_n + beta1 sigma^2_n.
RecursionMap garch11_m2(const GarchParams& p);
/// Absolute-value GARCH: sigma_{n+1} = alpha0 + alpha1 u sigma_n + beta1 sigma_n.
RecursionMap avgarch_m1(const GarchParams& p);
/// ARCH(1) in variance coordinates: alpha0 + alpha1 v sigma^2_n (beta1 ignored).
RecursionMap arch1_m2(const GarchParams& p);

/// Built-in map by label: "garch11" (m1/m2), "avgarch" (m1), "arch1" (m2).
RecursionMap make_recursion(RecursionKind kind, const std::string& label, const GarchParams& p);

struct ShapeCheck {
    bool increasing = true;
    bool componentwise_convex = true;
    double worst_first_difference = 0.0;
    double worst_second_difference = 0.0;
    std::string detail;

    bool ok() const noexcept { return increasing && componentwise_convex; }
};

/// Grid check of monotonicity and componentwise convexity on
/// [0, input_max] x [state_min, state_max]. Differences are compared against
/// -tol * max(1, |f|).
ShapeCheck check_shape(const RecursionMap& map, double input_max, double state_min,
                       double state_max, int points = 64, double tol = 1e-9);

}  // namespace garchord
