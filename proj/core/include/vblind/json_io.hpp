#pragma once

#include <string>
#include <string_view>

#include "vblind/blinds.hpp"
#include "vblind/measure.hpp"
#include "vblind/verify.hpp"

namespace vblind {

// All writers print floats with 17 significant digits, so parsing the text
// back gives the same doubles.
std::string to_json(const IntervalUnion& u);
std::string to_json(const BlindSet& blinds);
std::string to_json(const VerificationReport& report, bool with_padding = true);

BlindSet blindset_from_json(std::string_view text);
VerificationReport report_from_json(std::string_view text);
IntervalUnion interval_union_from_json(std::string_view text);

}  // namespace vblind
