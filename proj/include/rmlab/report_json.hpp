#pragma once

#include "json.hpp"
#include "rmlab/analyzer.hpp"

namespace rmlab {

// One JSON object per report; field names follow NullSpaceReport.
void to_json(nlohmann::json& j, const NullSpaceReport& r);
void from_json(const nlohmann::json& j, NullSpaceReport& r);

}  // namespace rmlab
