#include "garchord/innovation.hpp"

#include <boost/math/distributions/laplace.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace garchord {

namespace bm = boost::math;

InnovationSpec::InnovationSpec(InnovationFamily family, double df, double scale, bool normalized)
    : family_(family), df_(df), scale_(scale), normalized_(normalized) {
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw std::invalid_argument("InnovationSpec: scale must be positive and finite");
    }
}

InnovationSpec InnovationSpec::gaussian(double scale) {
    return InnovationSpec(InnovationFamily::gaussian, 0.0, scale, true);
}

InnovationSpec InnovationSpec::student_t(double df, double scale, bool normalized) {
    if (!(df > 2.0) || !std::isfinite(df)) {
        throw std::invalid_argument("InnovationSpec: Student-t needs finite df > 2");
    }
    InnovationSpec s(InnovationFamily::student_t, df, scale, normalized);
    if (normalized) {
        s.unit_factor_ = std::sqrt((df - 2.0) / df);
    }
    return s;
}

InnovationSpec InnovationSpec::laplace(double scale, bool normalized) {
    InnovationSpec s(InnovationFamily::laplace, 0.0, scale, normalized);
    if (normalized) {
        s.unit_factor_ = 1.0 / std::sqrt(2.0);
    }
    return s;
}

InnovationSpec InnovationSpec::discrete(std::vector<Atom> support, double scale, bool normalized) {
    InnovationSpec s(InnovationFamily::discrete, 0.0, scale, normalized);
    DiscreteDist base(std::move(support));
    if (!base.is_symmetric()) {
        throw std::invalid_argument(
            "InnovationSpec: discrete support is not symmetric about 0 (symmetric innovations "
            "are required)");
    }
    if (normalized) {
        const double m2 = base.raw_moment(2);
        if (!(m2 > 0.0)) {
            throw std::invalid_argument("InnovationSpec: cannot normalize a point mass at 0");
        }
        s.unit_factor_ = 1.0 / std::sqrt(m2);
    }
    s.discrete_ = base.scaled(s.effective_scale());
    return s;
}

double InnovationSpec::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
        throw std::invalid_argument("InnovationSpec::quantile: u must lie in (0, 1)");
    }
    switch (family_) {
        case InnovationFamily::gaussian:
            return effective_scale() * bm::quantile(bm::normal_distribution<double>(), u);
        case InnovationFamily::student_t:
            return effective_scale() * bm::quantile(bm::students_t_distribution<double>(df_), u);
        case InnovationFamily::laplace:
            return effective_scale() * bm::quantile(bm::laplace_distribution<double>(), u);
        case InnovationFamily::discrete:
            break;
    }
    // Smallest atom whose CDF reaches u; u is never exactly on a cumulative
    // boundary for practical purposes, so ties are resolved to the left.
    for (const Atom& a : discrete_->atoms()) {
        u -= a.prob;
        if (u <= 0.0) {
            return a.point;
        }
    }
    return discrete_->max();
}

double InnovationSpec::cdf(double x) const {
    const double z = x / effective_scale();
    switch (family_) {
        case InnovationFamily::gaussian:
            return bm::cdf(bm::normal_distribution<double>(), z);
        case InnovationFamily::student_t:
            return bm::cdf(bm::students_t_distribution<double>(df_), z);
        case InnovationFamily::laplace:
            return bm::cdf(bm::laplace_distribution<double>(), z);
        case InnovationFamily::discrete:
            break;
    }
    return discrete_->cdf(x);
}

double InnovationSpec::pdf(double x) const {
    const double s = effective_scale();
    const double z = x / s;
    switch (family_) {
        case InnovationFamily::gaussian:
            return bm::pdf(bm::normal_distribution<double>(), z) / s;
        case InnovationFamily::student_t:
            return bm::pdf(bm::students_t_distribution<double>(df_), z) / s;
        case InnovationFamily::laplace:
            return bm::pdf(bm::laplace_distribution<double>(), z) / s;
        case InnovationFamily::discrete:
            break;
    }
    throw std::logic_error("InnovationSpec::pdf: discrete law has no density");
}

double InnovationSpec::second_moment() const {
    const double s2 = effective_scale() * effective_scale();
    switch (family_) {
        case InnovationFamily::gaussian: return s2;
        case InnovationFamily::student_t: return s2 * df_ / (df_ - 2.0);
        case InnovationFamily::laplace: return s2 * 2.0;
        case InnovationFamily::discrete: break;
    }
    return discrete_->raw_moment(2);
}

double InnovationSpec::fourth_moment() const {
    const double s2 = effective_scale() * effective_scale();
    const double s4 = s2 * s2;
    switch (family_) {
        case InnovationFamily::gaussian: return 3.0 * s4;
        case InnovationFamily::student_t:
            if (!(df_ > 4.0)) {
                throw std::domain_error("Student-t fourth moment is infinite for df <= 4");
            }
            return s4 * 3.0 * df_ * df_ / ((df_ - 2.0) * (df_ - 4.0));
        case InnovationFamily::laplace: return s4 * 24.0;
        case InnovationFamily::discrete: break;
    }
    return discrete_->raw_moment(4);
}

double InnovationSpec::kurtosis() const {
    const double m2 = second_moment();
    return fourth_moment() / (m2 * m2);
}

double InnovationSpec::magnitude_quantile(double p) const {
    if (!(p >= 0.0 && p < 1.0)) {
        throw std::invalid_argument("magnitude_quantile: p must lie in [0, 1)");
    }
    if (family_ == InnovationFamily::discrete) {
        return discrete_->abs().quantile(p);
    }
    // Symmetric law: P(|e| <= q) = p  <=>  F(q) = (1 + p) / 2.
    return quantile(0.5 * (1.0 + p));
}

std::string InnovationSpec::describe() const {
    std::ostringstream os;
    switch (family_) {
        case InnovationFamily::gaussian: os << "gaussian"; break;
        case InnovationFamily::student_t: os << "student_t(df=" << df_ << ")"; break;
        case InnovationFamily::laplace: os << "laplace"; break;
        case InnovationFamily::discrete: os << "discrete(" << discrete_->size() << " atoms)"; break;
    }
    os << "[scale=" << scale_ << (normalized_ ? ", normalized" : "") << "]";
    return os.str();
}

}  // namespace garchord
