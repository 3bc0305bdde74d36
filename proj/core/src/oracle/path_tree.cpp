#include "garchord/oracle/path_tree.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace garchord::oracle {

ExactPathTree::ExactPathTree(RecursionMap recursion, DiscreteDist initial_state,
                             std::vector<DiscreteDist> innovations)
    : recursion_(std::move(recursion)),
      initial_(std::move(initial_state)),
      innovations_(std::move(innovations)) {
    if (innovations_.empty()) {
        throw std::invalid_argument("ExactPathTree: need at least one innovation law (e_0)");
    }
    if (!(initial_.min() > 0.0)) {
        throw std::invalid_argument("ExactPathTree: initial state must be strictly positive");
    }
}

ExactPathTree ExactPathTree::iid(RecursionMap recursion, DiscreteDist initial_state,
                                 const DiscreteDist& innovation, std::size_t n) {
    return ExactPathTree(std::move(recursion), std::move(initial_state),
                         std::vector<DiscreteDist>(n + 1, innovation));
}

ExactPathTree ExactPathTree::with_innovation(std::size_t k, DiscreteDist law) const {
    if (k >= innovations_.size()) {
        throw std::out_of_range("ExactPathTree::with_innovation: step beyond depth");
    }
    ExactPathTree copy = *this;
    copy.innovations_[k] = std::move(law);
    return copy;
}

double ExactPathTree::outcome_count() const noexcept {
    double count = static_cast<double>(initial_.size());
    for (const auto& d : innovations_) {
        count *= static_cast<double>(d.size());
    }
    return count;
}

namespace {

struct Walker {
    const RecursionMap& recursion;
    const std::vector<DiscreteDist>& laws;
    const std::function<void(const OutcomeView&)>& visit;
    std::vector<double> x;
    std::vector<double> sigma;

    void descend(std::size_t k, double prob, double state, double sum) {
        const double s = recursion.sigma_of(state);
        sigma[k] = s;
        const bool last = k + 1 == laws.size();
        for (const Atom& a : laws[k].atoms()) {
            x[k] = s * a.point;
            const double next = recursion(recursion.input_of(a.point), state);
            if (!std::isfinite(next) || !(next > 0.0)) {
                std::ostringstream os;
                os << "ExactPathTree: state left (0, inf) at step " << k + 1;
                throw std::domain_error(os.str());
            }
            if (last) {
                visit(OutcomeView{prob * a.prob, x, sigma, recursion.sigma_of(next), sum + x[k]});
            } else {
                descend(k + 1, prob * a.prob, next, sum + x[k]);
            }
        }
    }
};

}  // namespace

void ExactPathTree::for_each(const std::function<void(const OutcomeView&)>& visit) const {
    const double count = outcome_count();
    if (count > kMaxOutcomes) {
        std::ostringstream os;
        os << "ExactPathTree: " << count << " outcomes exceed the enumeration guard of "
           << kMaxOutcomes;
        throw std::length_error(os.str());
    }
    Walker w{recursion_, innovations_, visit, std::vector<double>(innovations_.size()),
             std::vector<double>(innovations_.size())};
    for (const Atom& init : initial_.atoms()) {
        w.descend(0, init.prob, init.point, 0.0);
    }
}

std::vector<TreeOutcome> ExactPathTree::enumerate() const {
    std::vector<TreeOutcome> out;
    out.reserve(static_cast<std::size_t>(std::min(outcome_count(), kMaxOutcomes)));
    for_each([&](const OutcomeView& v) {
        out.push_back({v.prob, {v.x.begin(), v.x.end()}, {v.sigma.begin(), v.sigma.end()},
                       v.sigma_next, v.sum});
    });
    return out;
}

double ExactPathTree::expectation(const std::function<double(const OutcomeView&)>& phi) const {
    long double acc = 0.0L;
    for_each([&](const OutcomeView& v) { acc += static_cast<long double>(v.prob) * phi(v); });
    return static_cast<double>(acc);
}

void ExactPathTree::append_marginal(Quantity q, std::size_t index, double weight,
                                    std::vector<Atom>& out) const {
    const std::size_t n = depth();
    const bool sigma_like = q == Quantity::sigma || q == Quantity::sigma_squared;
    if (q != Quantity::sum && (index > n + (sigma_like ? 1 : 0))) {
        throw std::out_of_range("ExactPathTree::marginal: index beyond depth");
    }
    for_each([&](const OutcomeView& v) {
        double value = 0.0;
        switch (q) {
            case Quantity::x: value = v.x[index]; break;
            case Quantity::abs_x: value = std::abs(v.x[index]); break;
            case Quantity::x_squared: value = v.x[index] * v.x[index]; break;
            case Quantity::sigma: value = index <= n ? v.sigma[index] : v.sigma_next; break;
            case Quantity::sigma_squared: {
                const double s = index <= n ? v.sigma[index] : v.sigma_next;
                value = s * s;
                break;
            }
            case Quantity::sum: value = v.sum; break;
        }
        out.push_back({value, weight * v.prob});
    });
}

DiscreteDist ExactPathTree::marginal(Quantity q, std::size_t index) const {
    std::vector<Atom> atoms;
    append_marginal(q, index, 1.0, atoms);
    return DiscreteDist(std::move(atoms));
}

void ExactPathTree::append_joint_x(double weight, std::vector<double>& rows,
                                   std::vector<double>& weights) const {
    for_each([&](const OutcomeView& v) {
        rows.insert(rows.end(), v.x.begin(), v.x.end());
        weights.push_back(weight * v.prob);
    });
}

MultiSample ExactPathTree::joint_x() const {
    std::vector<double> rows;
    std::vector<double> weights;
    append_joint_x(1.0, rows, weights);
    return MultiSample(depth() + 1, std::move(rows), std::move(weights));
}

}  // namespace garchord::oracle
