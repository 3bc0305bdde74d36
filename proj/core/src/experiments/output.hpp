#pragma once

#include "garchord/experiments/commands.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>

namespace garchord::experiments::detail {

/// Output directory that records every file it writes.
class OutputDir {
public:
    explicit OutputDir(std::filesystem::path root);

    const std::filesystem::path& root() const noexcept { return root_; }

    void write(const std::string& name, const std::function<void(std::ostream&)>& body,
               ExperimentReport& report) const;

    /// Every manifest entry exists and is non-empty.
    bool manifest_ok(const ExperimentReport& report, std::string& detail) const;

    /// Adds the manifest gate and writes the report JSON last.
    void finish(ExperimentReport& report) const;

private:
    std::filesystem::path root_;
};

void write_curve_csv(std::ostream& out, std::span<const double> grid, std::span<const double> baseline,
                     std::span<const double> variant);

}  // namespace garchord::experiments::detail
