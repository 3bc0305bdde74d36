#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace garchord::oracle {

/// P_m = {-1, +1}^m, enumerated lazily in binary order: bit i of the index
/// set means p_i = +1.
class SignVectorSet {
public:
    explicit SignVectorSet(std::size_t m) : m_(m) {
        if (m > 62) {
            throw std::invalid_argument("SignVectorSet: m must be <= 62");
        }
    }

    std::size_t dimension() const noexcept { return m_; }
    std::uint64_t size() const noexcept { return std::uint64_t{1} << m_; }

    std::vector<int> operator[](std::uint64_t index) const {
        std::vector<int> p(m_);
        fill(index, p);
        return p;
    }

    void fill(std::uint64_t index, std::vector<int>& p) const {
        p.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            p[i] = ((index >> i) & 1U) != 0 ? 1 : -1;
        }
    }

    template <class F>
    void for_each(F&& f) const {
        std::vector<int> p(m_);
        for (std::uint64_t idx = 0; idx < size(); ++idx) {
            fill(idx, p);
            f(static_cast<const std::vector<int>&>(p));
        }
    }

private:
    std::size_t m_;
};

}  // namespace garchord::oracle
