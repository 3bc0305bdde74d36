#include "experiments/output.hpp"

#include "detail/format.hpp"
#include "detail/json_convert.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace garchord::experiments {

namespace detail {

OutputDir::OutputDir(std::filesystem::path root) : root_(std::move(root)) {
    std::error_code ec;
    std::filesystem::create_directories(root_, ec);
    if (ec || !std::filesystem::is_directory(root_)) {
        throw ConfigError("cannot create output directory '" + root_.string() + "'");
    }
}

void OutputDir::write(const std::string& name, const std::function<void(std::ostream&)>& body,
                      ExperimentReport& report) const {
    const auto path = root_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    body(out);
    out.close();
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
    report.manifest.push_back(name);
}

bool OutputDir::manifest_ok(const ExperimentReport& report, std::string& detail) const {
    for (const auto& name : report.manifest) {
        std::error_code ec;
        const auto size = std::filesystem::file_size(root_ / name, ec);
        if (ec || size == 0) {
            detail = "missing or empty: " + name;
            return false;
        }
    }
    detail = std::to_string(report.manifest.size()) + " files";
    return true;
}

void OutputDir::finish(ExperimentReport& report) const {
    std::string detail;
    const bool ok = manifest_ok(report, detail);
    report.gates.push_back({"output files exist and are non-empty", ok, detail});
    const std::string name = artifact_name(report.experiment, "report", report.seed, "json");
    report.manifest.push_back(name);
    const std::string body = report_json(report);
    report.manifest.pop_back();
    write(name, [&](std::ostream& out) { out << body << '\n'; }, report);
}

void write_curve_csv(std::ostream& out, std::span<const double> grid, std::span<const double> baseline,
                     std::span<const double> variant) {
    if (baseline.size() != grid.size() || variant.size() != grid.size()) {
        throw std::invalid_argument("write_curve_csv: curve lengths differ from the grid");
    }
    out << "grid_point,value_baseline,value_variant\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << garchord::detail::format_double(grid[i]) << ','
            << garchord::detail::format_double(baseline[i]) << ','
            << garchord::detail::format_double(variant[i]) << '\n';
    }
}

}  // namespace detail

bool ExperimentReport::passed() const noexcept {
    if (premise_failure) {
        return false;
    }
    for (const auto& g : gates) {
        if (!g.passed) {
            return false;
        }
    }
    return true;
}

ExitCode ExperimentReport::exit_code() const noexcept {
    for (const auto& g : gates) {
        if (!g.passed) {
            return ExitCode::verdict_failure;
        }
    }
    return premise_failure ? ExitCode::premise_failure : ExitCode::ok;
}

std::string artifact_name(const std::string& experiment, const std::string& variant, const std::string& seed,
                          const std::string& ext) {
    return experiment + "__" + variant + "__" + seed + "." + ext;
}

std::string report_json(const ExperimentReport& report) {
    using json = nlohmann::ordered_json;
    const JsonOptions opts{};
    json j;
    j["schema"] = 1;
    j["experiment"] = report.experiment;
    j["seed"] = report.seed;
    j["passed"] = report.passed();
    j["exit_code"] = static_cast<int>(report.exit_code());
    json summaries = json::array();
    for (const auto& s : report.summaries) {
        summaries.push_back(json{{"name", s.name},
                                 {"params", s.params},
                                 {"n", s.n},
                                 {"mean", s.mean},
                                 {"variance", s.variance},
                                 {"beta2", s.beta2},
                                 {"mean_se", s.mean_se},
                                 {"variance_se", s.variance_se}});
    }
    j["summaries"] = std::move(summaries);
    json verdicts = json::array();
    for (const auto& v : report.verdicts) {
        verdicts.push_back(json{{"quantity", v.quantity},
                                {"baseline", v.baseline},
                                {"variant", v.variant},
                                {"verdict", garchord::detail::verdict_json(v.verdict, opts)}});
    }
    j["verdicts"] = std::move(verdicts);
    json diag = json::object();
    for (const auto& [k, v] : report.diagnostics) {
        diag[k] = v;
    }
    j["diagnostics"] = std::move(diag);
    json gates = json::array();
    for (const auto& g : report.gates) {
        gates.push_back(json{{"name", g.name}, {"passed", g.passed}, {"detail", g.detail}});
    }
    j["gates"] = std::move(gates);
    j["manifest"] = report.manifest;
    j["notes"] = report.notes;
    return j.dump(2);
}

}  // namespace garchord::experiments
