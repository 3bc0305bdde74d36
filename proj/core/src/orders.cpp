#include "garchord/orders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace garchord {

const char* to_string(Relation r) noexcept {
    switch (r) {
        case Relation::st: return "st";
        case Relation::icx: return "icx";
        case Relation::cx: return "cx";
        case Relation::peak: return "peak";
        case Relation::kurtosis: return "kurtosis";
        case Relation::supermodular_cx: return "supermodular_cx";
    }
    return "?";
}

const char* to_string(Direction d) noexcept {
    switch (d) {
        case Direction::a_below_b: return "A_below_B";
        case Direction::b_below_a: return "B_below_A";
        case Direction::incomparable: return "incomparable";
        case Direction::indistinguishable: return "indistinguishable";
    }
    return "?";
}

Direction flipped(Direction d) noexcept {
    switch (d) {
        case Direction::a_below_b: return Direction::b_below_a;
        case Direction::b_below_a: return Direction::a_below_b;
        default: return d;
    }
}

bool OrderVerdict::consistent() const noexcept {
    if (margin > max_gap || margin < min_gap) {
        return false;
    }
    switch (direction) {
        case Direction::a_below_b: return max_gap <= tolerance && margin <= tolerance;
        case Direction::b_below_a: return min_gap >= -tolerance && margin >= -tolerance;
        case Direction::indistinguishable:
            return max_gap <= tolerance && min_gap >= -tolerance && std::abs(margin) <= tolerance;
        case Direction::incomparable: return true;
    }
    return false;
}

const NamedCurve* OrderVerdict::curve(const std::string& name) const {
    for (const auto& c : curves) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

std::optional<double> OrderVerdict::value(const std::string& name) const {
    for (const auto& [k, v] : values) {
        if (k == name) {
            return v;
        }
    }
    return std::nullopt;
}

namespace {

void sort_unique(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t min_sample_size(const Distribution& a, const Distribution& b) {
    const std::size_t na = a.sample_size();
    const std::size_t nb = b.sample_size();
    if (na == 0) {
        return nb;
    }
    if (nb == 0) {
        return na;
    }
    return std::min(na, nb);
}

double pooled_sd(const Distribution& a, const Distribution& b) {
    return std::sqrt(0.5 * (a.variance() + b.variance()));
}

}  // namespace

std::vector<double> build_grid(const Distribution& a, const Distribution& b, const GridSpec& spec) {
    std::vector<double> grid;
    if (!spec.explicit_points.empty()) {
        grid = spec.explicit_points;
        sort_unique(grid);
        return grid;
    }
    if (a.is_exact() && b.is_exact()) {
        grid = a.points();
        const auto pb = b.points();
        grid.insert(grid.end(), pb.begin(), pb.end());
        sort_unique(grid);
        return grid;
    }
    if (spec.points < 2) {
        throw std::invalid_argument("GridSpec: need at least 2 points");
    }

    std::vector<double> pool;
    for (const Distribution* d : {&a, &b}) {
        if (const auto* e = d->empirical()) {
            const auto s = e->sample();
            std::vector<double> merged;
            merged.reserve(pool.size() + s.size());
            std::merge(pool.begin(), pool.end(), s.begin(), s.end(), std::back_inserter(merged));
            pool.swap(merged);
        }
    }
    const std::size_t g = spec.points;
    grid.reserve(g + 4);
    for (std::size_t i = 0; i < g; ++i) {
        const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(g);
        const auto idx = static_cast<std::size_t>(p * static_cast<double>(pool.size() - 1));
        grid.push_back(pool[idx]);
    }
    for (const Distribution* d : {&a, &b}) {
        grid.push_back(d->min());
        grid.push_back(d->max());
        if (const auto* e = d->exact()) {
            if (e->size() <= g) {
                for (const Atom& at : e->atoms()) {
                    grid.push_back(at.point);
                }
            } else {
                for (std::size_t i = 0; i < g; ++i) {
                    grid.push_back(e->quantile((static_cast<double>(i) + 0.5) / static_cast<double>(g)));
                }
            }
        }
    }
    sort_unique(grid);
    return grid;
}

double default_tolerance(const Distribution& a, const Distribution& b) {
    const std::size_t n = min_sample_size(a, b);
    if (n == 0) {
        return 1e-12;
    }
    const auto nd = static_cast<double>(n);
    return 3.0 * std::sqrt(std::log(nd) / nd);
}

double default_mean_tolerance(const Distribution& a, const Distribution& b) {
    if (a.is_exact() && b.is_exact()) {
        return 1e-12;
    }
    double var = 0.0;
    for (const Distribution* d : {&a, &b}) {
        if (const auto* e = d->empirical()) {
            var += e->sample_variance() / static_cast<double>(e->size());
        }
    }
    return 4.0 * std::sqrt(var);
}

OrderVerdict verdict_from_gaps(Relation relation, std::vector<double> grid,
                               const std::vector<double>& gaps, double tolerance) {
    OrderVerdict v;
    v.relation = relation;
    v.tolerance = tolerance;
    v.grid = std::move(grid);
    if (gaps.empty()) {
        v.direction = Direction::indistinguishable;
        v.notes.emplace_back("empty grid");
        return v;
    }
    v.max_gap = gaps.front();
    v.min_gap = gaps.front();
    v.margin = gaps.front();
    for (double g : gaps) {
        v.max_gap = std::max(v.max_gap, g);
        v.min_gap = std::min(v.min_gap, g);
        if (std::abs(g) > std::abs(v.margin)) {
            v.margin = g;
        }
    }
    const bool a_le_b = v.max_gap <= tolerance;
    const bool b_le_a = v.min_gap >= -tolerance;
    if (a_le_b && b_le_a) {
        v.direction = Direction::indistinguishable;
    } else if (a_le_b) {
        v.direction = Direction::a_below_b;
    } else if (b_le_a) {
        v.direction = Direction::b_below_a;
    } else {
        v.direction = Direction::incomparable;
    }
    return v;
}

OrderVerdict check_st(const Distribution& a, const Distribution& b, const GridSpec& grid_spec,
                      std::optional<double> tol) {
    auto grid = build_grid(a, b, grid_spec);
    const double t = tol.value_or(default_tolerance(a, b));
    std::vector<double> fa(grid.size());
    std::vector<double> fb(grid.size());
    std::vector<double> gaps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        fa[i] = a.cdf(grid[i]);
        fb[i] = b.cdf(grid[i]);
        gaps[i] = fb[i] - fa[i];
    }
    const bool degenerate = grid.size() == 1;
    OrderVerdict v = verdict_from_gaps(Relation::st, std::move(grid), gaps, t);
    if (degenerate) {
        v.direction = Direction::indistinguishable;
        v.notes.emplace_back("degenerate grid: all mass at one point");
    }
    v.curves.push_back({"cdf_A", std::move(fa)});
    v.curves.push_back({"cdf_B", std::move(fb)});
    return v;
}

OrderVerdict check_icx(const Distribution& a, const Distribution& b, const GridSpec& grid_spec,
                       std::optional<double> tol) {
    auto grid = build_grid(a, b, grid_spec);
    double t = 0.0;
    if (tol) {
        t = *tol;
    } else {
        t = default_tolerance(a, b);
        if (!(a.is_exact() && b.is_exact())) {
            t *= std::max(pooled_sd(a, b), 1e-300);
        }
    }
    std::vector<double> sa(grid.size());
    std::vector<double> sb(grid.size());
    std::vector<double> gaps(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        sa[i] = a.stop_loss(grid[i]);
        sb[i] = b.stop_loss(grid[i]);
        gaps[i] = sa[i] - sb[i];
    }
    OrderVerdict v = verdict_from_gaps(Relation::icx, std::move(grid), gaps, t);
    v.curves.push_back({"stop_loss_A", std::move(sa)});
    v.curves.push_back({"stop_loss_B", std::move(sb)});
    return v;
}

OrderVerdict check_cx(const Distribution& a, const Distribution& b, std::optional<double> mean_tol,
                      const GridSpec& grid, std::optional<double> tol) {
    OrderVerdict v = check_icx(a, b, grid, tol);
    v.relation = Relation::cx;
    const double ma = a.mean();
    const double mb = b.mean();
    const double mt = mean_tol.value_or(default_mean_tolerance(a, b));
    v.values.emplace_back("mean_A", ma);
    v.values.emplace_back("mean_B", mb);
    v.values.emplace_back("mean_tolerance", mt);
    if (std::abs(ma - mb) > mt) {
        v.direction = Direction::incomparable;
        v.notes.emplace_back("means differ beyond mean tolerance; convex order forces equal means");
    }
    return v;
}

SignChanges sign_changes(const Distribution& a, const Distribution& b, const GridSpec& grid_spec,
                         std::optional<double> tol) {
    const auto grid = build_grid(a, b, grid_spec);
    const double t = tol.value_or(default_tolerance(a, b));
    SignChanges out;
    int last = 0;
    for (double x : grid) {
        const double gap = b.cdf(x) - a.cdf(x);
        const int s = gap > t ? 1 : (gap < -t ? -1 : 0);
        if (s == 0 || s == last) {
            continue;
        }
        if (last != 0) {
            ++out.count;
            out.locations.push_back(x);
        }
        out.signs.push_back(s);
        last = s;
    }
    return out;
}

Direction single_cut_direction(const SignChanges& sc) noexcept {
    if (sc.signs.empty()) {
        return Direction::indistinguishable;
    }
    if (sc.count == 1 && sc.signs[0] == 1) {
        return Direction::a_below_b;
    }
    if (sc.count == 1 && sc.signs[0] == -1) {
        return Direction::b_below_a;
    }
    return Direction::incomparable;
}

namespace {

std::string sign_text(const SignChanges& sc) {
    std::string s;
    for (int v : sc.signs) {
        if (!s.empty()) {
            s += ',';
        }
        s += v > 0 ? '+' : '-';
    }
    return "(" + s + ")";
}

std::optional<std::string> asymmetry_warning(const Distribution& d, const char* name) {
    bool asym = false;
    if (const auto* e = d.exact()) {
        asym = !e->is_symmetric();
    } else {
        const auto* s = d.empirical();
        const double se = std::sqrt(s->sample_variance() / static_cast<double>(s->size()));
        asym = std::abs(s->mean()) > 4.0 * se;
    }
    if (asym) {
        return std::string("warning: ") + name + " does not look symmetric about 0";
    }
    return std::nullopt;
}

}  // namespace

OrderVerdict check_peakedness(const Distribution& a, const Distribution& b,
                              std::optional<double> tol) {
    OrderVerdict v = check_st(a.abs(), b.abs(), {}, tol);
    v.relation = Relation::peak;
    const OrderVerdict squares = check_st(a.square(), b.square(), {}, tol);
    // Under symmetry F_|X|(t) = 1 - 2 F(-t), so one-sided gaps are half the
    // gaps on |X|; the cut reading uses half the band.
    const SignChanges cut = sign_changes(a, b, {}, v.tolerance / 2.0);
    v.values.emplace_back("single_cut_count", cut.count);
    v.notes.push_back(std::string("st_squares: ") + to_string(squares.direction));
    v.notes.push_back(std::string("single_cut: ") + to_string(single_cut_direction(cut)) + " " +
                      sign_text(cut));
    for (auto w : {asymmetry_warning(a, "A"), asymmetry_warning(b, "B")}) {
        if (w) {
            v.notes.push_back(*w);
        }
    }
    return v;
}

double kurtosis_beta2(const Distribution& d) {
    const double m2 = d.central_moment(2);
    const double m4 = d.central_moment(4);
    const double b2 = m4 / (m2 * m2);
    if (!std::isfinite(b2)) {
        throw std::domain_error("kurtosis_beta2: non-finite fourth-moment estimate");
    }
    return b2;
}

OrderVerdict check_kurtosis_order(const Distribution& a, const Distribution& b,
                                  const GridSpec& grid, std::optional<double> tol) {
    OrderVerdict v = check_icx(a.square(), b.square(), grid, tol);
    v.relation = Relation::kurtosis;
    v.values.emplace_back("beta2_A", kurtosis_beta2(a));
    v.values.emplace_back("beta2_B", kurtosis_beta2(b));
    v.values.emplace_back("second_moment_A", a.central_moment(2) + a.mean() * a.mean());
    v.values.emplace_back("second_moment_B", b.central_moment(2) + b.mean() * b.mean());
    return v;
}

}  // namespace garchord
