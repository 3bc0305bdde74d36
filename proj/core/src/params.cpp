#include "garchord/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace garchord {

namespace {

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("GarchParams: ") + name + " must be finite");
    }
}

}  // namespace

GarchParams::GarchParams(double alpha0, double alpha1, double beta1)
    : alpha0_(alpha0), alpha1_(alpha1), beta1_(beta1) {
    require_finite(alpha0, "alpha0");
    require_finite(alpha1, "alpha1");
    require_finite(beta1, "beta1");
    if (!(alpha0 > 0.0) || !(alpha1 > 0.0) || !(beta1 > 0.0)) {
        throw std::invalid_argument("GarchParams: alpha0, alpha1 and beta1 must be > 0");
    }
    if (!(alpha1 + beta1 < 1.0)) {
        std::ostringstream os;
        os << "GarchParams: alpha1 + beta1 = " << alpha1 + beta1
           << " violates covariance stationarity (< 1); use the unchecked path to explore it";
        throw std::invalid_argument(os.str());
    }
}

GarchParams::GarchParams(UncheckedTag, double alpha0, double alpha1, double beta1)
    : alpha0_(alpha0), alpha1_(alpha1), beta1_(beta1), unchecked_(true) {
    require_finite(alpha0, "alpha0");
    require_finite(alpha1, "alpha1");
    require_finite(beta1, "beta1");
    if (!(alpha0 > 0.0)) {
        throw std::invalid_argument("GarchParams: alpha0 must be > 0");
    }
    if (alpha1 < 0.0 || beta1 < 0.0) {
        throw std::invalid_argument("GarchParams: alpha1 and beta1 must be >= 0");
    }
}

GarchParams GarchParams::unchecked(double alpha0, double alpha1, double beta1) {
    return GarchParams(UncheckedTag{}, alpha0, alpha1, beta1);
}

double GarchParams::unconditional_variance() const noexcept {
    if (!is_stationary()) {
        return std::numeric_limits<double>::infinity();
    }
    return alpha0_ / (1.0 - alpha1_ - beta1_);
}

GarchParams GarchParams::with(const std::string& name, double value) const {
    double a0 = alpha0_;
    double a1 = alpha1_;
    double b1 = beta1_;
    if (name == "alpha0") {
        a0 = value;
    } else if (name == "alpha1") {
        a1 = value;
    } else if (name == "beta1") {
        b1 = value;
    } else {
        throw std::invalid_argument("GarchParams: unknown parameter '" + name +
                                    "' (expected alpha0, alpha1 or beta1)");
    }
    return unchecked_ ? unchecked(a0, a1, b1) : GarchParams(a0, a1, b1);
}

std::string GarchParams::describe() const {
    std::ostringstream os;
    os << "garch11(alpha0=" << alpha0_ << ", alpha1=" << alpha1_ << ", beta1=" << beta1_ << ")";
    if (unchecked_) {
        os << "[unchecked]";
    }
    return os.str();
}

}  // namespace garchord
