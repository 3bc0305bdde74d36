#include "garchord/test_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace garchord {

MultiSample::MultiSample(std::size_t dim, std::vector<double> rows, std::vector<double> weights)
    : dim_(dim), rows_(std::move(rows)), weights_(std::move(weights)) {
    if (dim_ == 0 || rows_.size() != dim_ * weights_.size() || weights_.empty()) {
        throw std::invalid_argument("MultiSample: rows must hold dim * size values");
    }
    long double total = 0.0L;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            throw std::invalid_argument("MultiSample: weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(static_cast<double>(total) - 1.0) > 1e-12) {
        throw std::invalid_argument("MultiSample: weights must sum to 1");
    }
}

MultiSample MultiSample::equal_weights(std::size_t dim, std::vector<double> rows) {
    if (dim == 0 || rows.size() % dim != 0 || rows.size() / dim < 2) {
        throw std::invalid_argument("MultiSample: need at least 2 rows of length dim");
    }
    const std::size_t n = rows.size() / dim;
    MultiSample s(dim, std::move(rows), std::vector<double>(n, 1.0 / static_cast<double>(n)));
    s.exact_ = false;
    return s;
}

Distribution MultiSample::project(std::span<const double> c) const {
    if (c.size() != dim_) {
        throw std::invalid_argument("MultiSample::project: weight dimension mismatch");
    }
    std::vector<double> values(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const auto r = row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            acc += c[j] * r[j];
        }
        values[i] = acc;
    }
    if (!exact_) {
        return EmpiricalDist(std::move(values));
    }
    std::vector<Atom> atoms(size());
    for (std::size_t i = 0; i < size(); ++i) {
        atoms[i] = {values[i], weights_[i]};
    }
    return DiscreteDist(std::move(atoms));
}

Distribution MultiSample::marginal(std::size_t coordinate) const {
    if (coordinate >= dim_) {
        throw std::out_of_range("MultiSample::marginal: coordinate out of range");
    }
    std::vector<double> c(dim_, 0.0);
    c[coordinate] = 1.0;
    return project(c);
}

double RidgeFunction::operator()(std::span<const double> x) const {
    double t = -threshold;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        t += weights[j] * x[j];
    }
    if (t <= 0.0) {
        return 0.0;
    }
    return power == 1 ? t : t * t;
}

TestFunctionFamily::TestFunctionFamily(Kind kind, std::size_t dim,
                                       std::vector<std::vector<double>> weights,
                                       std::vector<int> powers)
    : kind_(kind), dim_(dim), weights_(std::move(weights)), powers_(std::move(powers)) {}

TestFunctionFamily TestFunctionFamily::convex_univariate() {
    return TestFunctionFamily(Kind::convex_univariate, 1, {{1.0}, {-1.0}}, {1});
}

TestFunctionFamily TestFunctionFamily::increasing_convex_univariate() {
    return TestFunctionFamily(Kind::increasing_convex_univariate, 1, {{1.0}}, {1});
}

TestFunctionFamily TestFunctionFamily::supermodular_convex(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("supermodular_convex: dim must be >= 1");
    }
    std::vector<std::vector<double>> weights;
    auto add = [&](std::vector<double> c) {
        if (std::find(weights.begin(), weights.end(), c) == weights.end()) {
            weights.push_back(std::move(c));
        }
    };
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<double> unit(dim, 0.0);
        unit[i] = 1.0;
        add(std::move(unit));
    }
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<double> prefix(dim, 0.0);
        std::vector<double> suffix(dim, 0.0);
        for (std::size_t j = 0; j < dim; ++j) {
            prefix[j] = j <= i ? 1.0 : 0.0;
            suffix[j] = j >= i ? 1.0 : 0.0;
        }
        add(std::move(prefix));
        add(std::move(suffix));
    }
    return supermodular_convex(dim, std::move(weights));
}

TestFunctionFamily TestFunctionFamily::supermodular_convex(
    std::size_t dim, std::vector<std::vector<double>> weights) {
    for (const auto& c : weights) {
        if (c.size() != dim) {
            throw std::invalid_argument("supermodular_convex: weight vector dimension mismatch");
        }
        if (std::any_of(c.begin(), c.end(), [](double v) { return v < 0.0; })) {
            throw std::invalid_argument(
                "supermodular_convex: weights must be nonnegative (psi(c.x) is supermodular only "
                "for c >= 0)");
        }
    }
    return TestFunctionFamily(Kind::supermodular_convex_multivariate, dim, std::move(weights),
                              {1, 2});
}

std::vector<RidgeFunction> TestFunctionFamily::members(std::span<const double> thresholds) const {
    std::vector<RidgeFunction> out;
    out.reserve(weights_.size() * powers_.size() * thresholds.size());
    for (const auto& c : weights_) {
        for (int p : powers_) {
            for (double k : thresholds) {
                out.push_back({c, k, p});
            }
        }
    }
    return out;
}

TestFunctionFamily::Validation TestFunctionFamily::validate(std::uint64_t seed,
                                                            std::size_t probes_per_member) const {
    Validation out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 2.0);
    auto draw = [&] {
        std::vector<double> v(dim_);
        for (double& x : v) {
            x = normal(rng);
        }
        return v;
    };
    const std::vector<double> thresholds = {-1.5, -0.25, 0.0, 0.7, 2.0};
    for (const RidgeFunction& f : members(thresholds)) {
        for (std::size_t probe = 0; probe < probes_per_member; ++probe) {
            const auto x = draw();
            const auto y = draw();
            std::vector<double> mid(dim_);
            std::vector<double> lo(dim_);
            std::vector<double> hi(dim_);
            for (std::size_t j = 0; j < dim_; ++j) {
                mid[j] = 0.5 * (x[j] + y[j]);
                lo[j] = std::min(x[j], y[j]);
                hi[j] = std::max(x[j], y[j]);
            }
            const double fx = f(x);
            const double fy = f(y);
            const double slack = 1e-12 * (1.0 + std::abs(fx) + std::abs(fy));
            ++out.probes;
            auto fail = [&](const char* what) {
                if (out.ok) {
                    std::ostringstream os;
                    os << what << " violated for threshold " << f.threshold << ", power " << f.power;
                    out.detail = os.str();
                }
                out.ok = false;
            };
            if (f(mid) > 0.5 * (fx + fy) + slack) {
                fail("midpoint convexity");
            }
            if (kind_ == Kind::increasing_convex_univariate && f(lo) > f(hi) + slack) {
                fail("monotonicity");
            }
            if (kind_ == Kind::supermodular_convex_multivariate &&
                fx + fy > f(lo) + f(hi) + slack) {
                fail("supermodularity");
            }
        }
    }
    return out;
}

OrderVerdict check_supermodular_cx(const MultiSample& a, const MultiSample& b,
                                   const TestFunctionFamily& family, std::optional<double> tol) {
    if (family.kind() != TestFunctionFamily::Kind::supermodular_convex_multivariate) {
        throw std::invalid_argument("check_supermodular_cx: family must be supermodular_convex");
    }
    if (a.dim() != b.dim() || a.dim() != family.dim()) {
        throw std::invalid_argument("check_supermodular_cx: dimension mismatch");
    }
    const bool exact = a.is_exact() && b.is_exact();
    double t = 0.0;
    if (tol) {
        t = *tol;
    } else if (exact) {
        t = 1e-12;
    } else {
        const auto n = static_cast<double>(std::min(a.size(), b.size()));
        t = 3.0 * std::sqrt(std::log(n) / n);
    }

    std::vector<double> grid;
    std::vector<double> gaps;
    std::vector<std::pair<std::string, double>> member_gaps;
    for (std::size_t w = 0; w < family.weights().size(); ++w) {
        const auto& c = family.weights()[w];
        const Distribution pa = a.project(c);
        const Distribution pb = b.project(c);
        GridSpec spec;
        spec.points = 64;
        const auto thresholds = build_grid(pa, pb, spec);
        const double sd = exact ? 1.0 : std::sqrt(0.5 * (pa.variance() + pb.variance()));
        for (int power : family.powers()) {
            const double unit = exact ? 1.0 : std::max(std::pow(sd, power), 1e-300);
            double worst = -std::numeric_limits<double>::infinity();
            for (double k : thresholds) {
                const double gap = (pa.partial_moment(k, power) - pb.partial_moment(k, power)) / unit;
                grid.push_back(k);
                gaps.push_back(gap);
                worst = std::max(worst, gap);
            }
            member_gaps.emplace_back("max_gap[w" + std::to_string(w) + ",p" + std::to_string(power) + "]",
                                     worst);
        }
    }
    OrderVerdict v = verdict_from_gaps(Relation::supermodular_cx, std::move(grid), gaps, t);
    v.values = std::move(member_gaps);
    v.values.emplace_back("members", static_cast<double>(family.weights().size() * family.powers().size()));
    if (!exact) {
        v.notes.emplace_back("gaps in units of sd(c.X)^power");
    }
    return v;
}

}  // namespace garchord
