#pragma once

#include "garchord/distribution.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace garchord {

enum class Relation { st, icx, cx, peak, kurtosis, supermodular_cx };
enum class Direction { a_below_b, b_below_a, incomparable, indistinguishable };

const char* to_string(Relation r) noexcept;
const char* to_string(Direction d) noexcept;
Direction flipped(Direction d) noexcept;

struct NamedCurve {
    std::string name;
    std::vector<double> values;
};

/// Outcome of an order test between A and B.
///
/// Gaps are oriented so that "A below B" means every gap is <= tolerance and
/// "B below A" means every gap is >= -tolerance. `margin` is the gap with
/// the largest magnitude (first on ties), so swapping A and B negates it.
/// `max_gap` / `min_gap` keep the one-sided extremes.
struct OrderVerdict {
    Relation relation = Relation::st;
    Direction direction = Direction::indistinguishable;
    double margin = 0.0;
    double max_gap = 0.0;
    double min_gap = 0.0;
    double tolerance = 0.0;
    std::vector<double> grid;
    std::vector<NamedCurve> curves;
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::string> notes;

    /// Slack of the claim "A below B": -max_gap. Nonnegative (up to the
    /// tolerance) exactly when the claim holds.
    double slack() const noexcept { return -max_gap; }

    /// Direction agrees with the recorded gaps and tolerance.
    bool consistent() const noexcept;

    const NamedCurve* curve(const std::string& name) const;
    std::optional<double> value(const std::string& name) const;
};

/// Evaluation points for curve comparisons.
///
/// Default: exact-vs-exact uses the union of supports (exact for CDF and
/// stop-loss comparisons); otherwise `points` pooled quantiles of both
/// inputs plus support endpoints (and exact support points when few).
struct GridSpec {
    std::size_t points = 512;
    std::vector<double> explicit_points;
};

std::vector<double> build_grid(const Distribution& a, const Distribution& b,
                               const GridSpec& spec = {});

/// Exact comparisons: 1e-12. Empirical: 3 sqrt(ln n / n) with n the smaller
/// sample size.
double default_tolerance(const Distribution& a, const Distribution& b);

/// 4 standard errors of the mean difference (1e-12 when both exact).
double default_mean_tolerance(const Distribution& a, const Distribution& b);

/// Decides direction and margin from oriented gaps.
OrderVerdict verdict_from_gaps(Relation relation, std::vector<double> grid,
                               const std::vector<double>& gaps, double tolerance);

/// A <=st B iff F_A(x) >= F_B(x) - tol on the grid. Gap: F_B - F_A.
OrderVerdict check_st(const Distribution& a, const Distribution& b, const GridSpec& grid = {},
                      std::optional<double> tol = std::nullopt);

/// A <=icx B iff SL_A(k) <= SL_B(k) + tol on the grid. Gap: SL_A - SL_B.
/// The empirical default tolerance is scaled by the pooled standard
/// deviation.
OrderVerdict check_icx(const Distribution& a, const Distribution& b, const GridSpec& grid = {},
                       std::optional<double> tol = std::nullopt);

/// Equal means within mean_tol and icx; otherwise incomparable.
OrderVerdict check_cx(const Distribution& a, const Distribution& b,
                      std::optional<double> mean_tol = std::nullopt, const GridSpec& grid = {},
                      std::optional<double> tol = std::nullopt);

struct SignChanges {
    int count = 0;
    std::vector<int> signs;            // collapsed sequence of +1 / -1
    std::vector<double> locations;     // grid points where the sign flips
};

/// Sign changes of G - F (F = CDF of A, G = CDF of B) on the grid, treating
/// |G - F| <= tol as a tie.
SignChanges sign_changes(const Distribution& a, const Distribution& b, const GridSpec& grid = {},
                         std::optional<double> tol = std::nullopt);

/// Reads a single-cut pattern as a direction: none -> indistinguishable,
/// (+,-) -> A below B, (-,+) -> B below A, anything else -> incomparable.
Direction single_cut_direction(const SignChanges& sc) noexcept;

/// Peakedness for symmetric laws: st order of |A| vs |B|; the squared-law st
/// verdict and the single-cut reading are attached as evidence.
OrderVerdict check_peakedness(const Distribution& a, const Distribution& b,
                              std::optional<double> tol = std::nullopt);

/// Pearson kurtosis from central moments. Throws std::domain_error when the
/// estimate is not finite.
double kurtosis_beta2(const Distribution& d);

/// Kurtosis ordering of symmetric laws: icx order of A^2 vs B^2, with both
/// beta2 values and second moments attached.
OrderVerdict check_kurtosis_order(const Distribution& a, const Distribution& b,
                                  const GridSpec& grid = {},
                                  std::optional<double> tol = std::nullopt);

}  // namespace garchord
