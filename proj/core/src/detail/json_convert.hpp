#pragma once

#include "garchord/orders.hpp"
#include "garchord/serialize.hpp"

#include <json.hpp>

namespace garchord::detail {

nlohmann::ordered_json verdict_json(const OrderVerdict& v, const JsonOptions& options);

}  // namespace garchord::detail
