#include "garchord/serialize.hpp"

#include "detail/format.hpp"
#include "detail/json_convert.hpp"

#include <ostream>
#include <stdexcept>

namespace garchord {

namespace detail {

namespace {

std::vector<std::size_t> thinned_indices(std::size_t n, std::size_t limit) {
    std::vector<std::size_t> idx;
    if (limit == 0 || n <= limit) {
        idx.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            idx[i] = i;
        }
        return idx;
    }
    idx.reserve(limit);
    for (std::size_t i = 0; i < limit; ++i) {
        idx.push_back(i * (n - 1) / (limit - 1));
    }
    return idx;
}

nlohmann::ordered_json pick(const std::vector<double>& v, const std::vector<std::size_t>& idx) {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i : idx) {
        if (i < v.size()) {
            arr.push_back(v[i]);
        }
    }
    return arr;
}

}  // namespace

nlohmann::ordered_json verdict_json(const OrderVerdict& v, const JsonOptions& options) {
    const auto idx = thinned_indices(v.grid.size(), options.max_curve_points);
    nlohmann::ordered_json j;
    j["relation"] = to_string(v.relation);
    j["direction"] = to_string(v.direction);
    j["margin"] = v.margin;
    j["max_gap"] = v.max_gap;
    j["min_gap"] = v.min_gap;
    j["slack"] = v.slack();
    j["tolerance"] = v.tolerance;
    j["grid_size"] = v.grid.size();
    j["grid"] = pick(v.grid, idx);
    nlohmann::ordered_json curves = nlohmann::ordered_json::object();
    for (const auto& c : v.curves) {
        curves[c.name] = pick(c.values, idx);
    }
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, val] : v.values) {
        values[k] = val;
    }
    j["evidence"] = {{"curves", curves}, {"values", values}, {"notes", v.notes}};
    return j;
}

}  // namespace detail

std::string to_json(const OrderVerdict& verdict, const JsonOptions& options) {
    return detail::verdict_json(verdict, options).dump(options.indent);
}

void write_curves_csv(std::ostream& out, const OrderVerdict& verdict, const std::string& curve_a,
                      const std::string& curve_b) {
    const NamedCurve* a = verdict.curve(curve_a);
    const NamedCurve* b = verdict.curve(curve_b);
    if (a == nullptr || b == nullptr) {
        throw std::invalid_argument("write_curves_csv: verdict has no curve '" +
                                    (a == nullptr ? curve_a : curve_b) + "'");
    }
    out << "grid_point,value_baseline,value_variant\n";
    for (std::size_t i = 0; i < verdict.grid.size(); ++i) {
        out << detail::format_double(verdict.grid[i]) << ',' << detail::format_double(a->values[i])
            << ',' << detail::format_double(b->values[i]) << '\n';
    }
}

}  // namespace garchord
