#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vblind/alpha_set.hpp"
#include "vblind/curve.hpp"
#include "vblind/geometry.hpp"

namespace vblind {

struct SceneSpec {
    int schema_version = 1;
    std::string id;
    std::string curve_name;
    std::optional<Interval> curve_domain;
    Point y;
    Interval subrange;
    std::vector<Interval> a_small;
    Interval a_cover;
    double epsilon = 0.0;
    double delta = 0.0;
    int alpha_points = 200;
    int segment_points = 64;
    int n_max = 1 << 20;
    int m_max = 64;
    std::uint64_t seed = 0;

    CurveProfile curve() const { return CurveProfile::builtin(curve_name, curve_domain); }
    AlphaSet small_set() const { return AlphaSet::with_points(a_small, alpha_points); }
    AlphaSet cover_set() const { return AlphaSet::with_points({a_cover}, alpha_points); }

    friend bool operator==(const SceneSpec&, const SceneSpec&) = default;
};

// Throws SceneError naming the offending field.
void validate(const SceneSpec& spec);

SceneSpec parse_scene(std::string_view json_text);
SceneSpec load_scene(const std::string& path);
std::string serialize_scene(const SceneSpec& spec);

}  // namespace vblind
