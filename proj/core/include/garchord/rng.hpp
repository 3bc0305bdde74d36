#pragma once

#include <cstdint>
#include <random>

namespace garchord {

/// Independent random stream for one path, derived from (master seed, path
/// index) through std::seed_seq so partitioning paths across workers never
/// changes what a path sees.
class PathStream {
public:
    PathStream(std::uint64_t seed, std::uint64_t path);

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform() noexcept {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace garchord
