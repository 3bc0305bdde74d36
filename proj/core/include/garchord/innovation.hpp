#pragma once

#include "garchord/distribution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace garchord {

enum class InnovationFamily { gaussian, student_t, laplace, discrete };

/// Symmetric zero-mean innovation law.
///
/// The drawn variate is `scale * Z` where Z is the family's standard
/// variate, rescaled to unit variance when `normalized` is set (Student-t by
/// sqrt((df - 2) / df), Laplace to b = 1/sqrt(2), discrete supports by the
/// root second moment). Draws go through the inverse CDF, so one uniform
/// yields one innovation under every law; that is what makes common random
/// numbers work across innovation comparisons.
class InnovationSpec {
public:
    static InnovationSpec gaussian(double scale = 1.0);
    static InnovationSpec student_t(double df, double scale = 1.0, bool normalized = true);
    static InnovationSpec laplace(double scale = 1.0, bool normalized = true);
    /// Throws std::invalid_argument if the support is not symmetric about 0.
    static InnovationSpec discrete(std::vector<Atom> support, double scale = 1.0,
                                   bool normalized = false);

    InnovationFamily family() const noexcept { return family_; }
    double df() const noexcept { return df_; }
    double scale() const noexcept { return scale_; }
    bool normalized() const noexcept { return normalized_; }
    bool is_continuous() const noexcept { return family_ != InnovationFamily::discrete; }

    /// Inverse CDF at u in (0, 1).
    double quantile(double u) const;
    double cdf(double x) const;
    /// Density; only for continuous families.
    double pdf(double x) const;

    double second_moment() const;
    /// Throws std::domain_error when infinite (Student-t with df <= 4).
    double fourth_moment() const;
    /// Pearson kurtosis E[e^4] / E[e^2]^2.
    double kurtosis() const;

    /// p-quantile of |e|.
    double magnitude_quantile(double p) const;

    /// Exact law for discrete families (after scaling/normalization).
    const std::optional<DiscreteDist>& as_discrete() const noexcept { return discrete_; }

    std::string describe() const;

private:
    InnovationSpec(InnovationFamily family, double df, double scale, bool normalized);

    /// Multiplier from the family's textbook variate to the drawn variate.
    double effective_scale() const noexcept { return scale_ * unit_factor_; }

    InnovationFamily family_;
    double df_ = 0.0;
    double scale_ = 1.0;
    bool normalized_ = false;
    double unit_factor_ = 1.0;
    std::optional<DiscreteDist> discrete_;
};

}  // namespace garchord
