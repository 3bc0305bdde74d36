#include "garchord/oracle/dilation.hpp"

#include <cmath>
#include <stdexcept>

namespace garchord::oracle {

DilationPair make_dilation(const DiscreteDist& base, double spread) {
    if (!(spread >= 0.0) || !std::isfinite(spread)) {
        throw std::invalid_argument("make_dilation: spread must be finite and >= 0");
    }
    if (!base.is_symmetric() || std::abs(base.mean()) > 1e-12) {
        throw std::invalid_argument("make_dilation: base law must be symmetric with mean 0");
    }
    std::vector<Atom> atoms;
    atoms.reserve(2 * base.size());
    for (const Atom& a : base.atoms()) {
        atoms.push_back({a.point * (1.0 - spread), 0.5 * a.prob});
        atoms.push_back({a.point * (1.0 + spread), 0.5 * a.prob});
    }
    DiscreteDist dilated(std::move(atoms));
    OrderVerdict verdict = check_cx(base, dilated);
    if (verdict.direction != Direction::a_below_b &&
        verdict.direction != Direction::indistinguishable) {
        throw std::logic_error("make_dilation: constructed pair failed the exact cx check");
    }
    return {base, std::move(dilated), std::move(verdict)};
}

}  // namespace garchord::oracle
