#pragma once

#include "garchord/distribution.hpp"
#include "garchord/orders.hpp"

namespace garchord::oracle {

/// base <=cx dilated, both symmetric with mean 0, verified exactly.
struct DilationPair {
    DiscreteDist base;
    DiscreteDist dilated;
    OrderVerdict verdict;
};

/// Martingale dilation: dilated = law of X * Y with Y uniform on
/// {1 - spread, 1 + spread} independent of X ~ base. Throws
/// std::invalid_argument if base is not symmetric or spread < 0, and
/// std::logic_error if the exact cx check of the result fails.
DilationPair make_dilation(const DiscreteDist& base, double spread);

}  // namespace garchord::oracle
