#pragma once

#include <json.hpp>
#include <string>

#include "vblind/blinds.hpp"
#include "vblind/verify.hpp"

namespace vblind::detail {

using nlohmann::json;

// Indented JSON with every float written as %.17g.
std::string emit(const json& value);

json point_json(Point p);
Point point_from(const json& j, const std::string& path);
json blindset_json(const BlindSet& blinds);
BlindSet blindset_from(const json& j);
json report_json(const VerificationReport& report, bool with_padding);
VerificationReport report_from(const json& j);

double number_at(const json& j, const std::string& path);

}  // namespace vblind::detail
