#pragma once

#include <json.hpp>

#include "pretzel/classify.hpp"

namespace pretzel {

/// Stable field names; `timing` is the only nondeterministic member and is
/// omitted when `with_timing` is false.
nlohmann::ordered_json to_json(const KnotReport& report, bool with_timing = true);
nlohmann::ordered_json to_json(const FFVerdict& verdict);

}  // namespace pretzel
