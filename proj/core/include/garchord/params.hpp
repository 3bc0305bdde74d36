#pragma once

#include <string>

namespace garchord {

/// GARCH(1,1) coefficients (alpha0, alpha1, beta1).
///
/// The checked constructor enforces positivity and covariance stationarity
/// (alpha1 + beta1 < 1). The unchecked path keeps alpha0 > 0 but accepts
/// alpha1, beta1 >= 0 with any sum, and the value remembers that it was
/// built that way.
class GarchParams {
public:
    GarchParams(double alpha0, double alpha1, double beta1);

    static GarchParams unchecked(double alpha0, double alpha1, double beta1);

    double alpha0() const noexcept { return alpha0_; }
    double alpha1() const noexcept { return alpha1_; }
    double beta1() const noexcept { return beta1_; }

    bool is_unchecked() const noexcept { return unchecked_; }
    bool is_stationary() const noexcept { return alpha1_ + beta1_ < 1.0; }

    /// Unconditional variance alpha0 / (1 - alpha1 - beta1); infinite when
    /// the parameters are not stationary.
    double unconditional_variance() const noexcept;

    /// Copy with one coefficient replaced ("alpha0", "alpha1" or "beta1").
    /// Keeps the checked/unchecked mode of *this.
    GarchParams with(const std::string& name, double value) const;

    std::string describe() const;

    friend bool operator==(const GarchParams&, const GarchParams&) = default;

private:
    struct UncheckedTag {};
    GarchParams(UncheckedTag, double alpha0, double alpha1, double beta1);

    double alpha0_;
    double alpha1_;
    double beta1_;
    bool unchecked_ = false;
};

}  // namespace garchord
