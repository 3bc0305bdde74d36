#pragma once

#include "garchord/orders.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>

namespace garchord {

struct JsonOptions {
    /// Grids and curves longer than this are thinned to evenly strided
    /// points (first and last kept); 0 keeps everything.
    std::size_t max_curve_points = 512;
    int indent = 2;
};

/// {relation, direction, margin, max_gap, min_gap, slack, tolerance, grid,
///  grid_size, evidence: {curves, values, notes}}
std::string to_json(const OrderVerdict& verdict, const JsonOptions& options = {});

/// Writes `grid_point,value_baseline,value_variant` rows from two named
/// evidence curves (A is the baseline).
void write_curves_csv(std::ostream& out, const OrderVerdict& verdict, const std::string& curve_a,
                      const std::string& curve_b);

}  // namespace garchord
