#include "vblind/scene.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"
#include "vblind/errors.hpp"

namespace vblind {

namespace {

using detail::json;

Interval interval_from(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) {
        throw SceneError(path, "interval must be [lo, hi]");
    }
    const double lo = detail::number_at(j[0], path + "[0]");
    const double hi = detail::number_at(j[1], path + "[1]");
    if (lo > hi) {
        throw SceneError(path, "interval has lo > hi");
    }
    return {lo, hi};
}

json interval_json(Interval i) { return json::array({i.lo, i.hi}); }

const json& field(const json& j, const std::string& key, const std::string& path = "") {
    if (!j.is_object()) {
        throw SceneError(path.empty() ? "scene" : path, "expected an object");
    }
    if (!j.contains(key)) {
        throw SceneError(path.empty() ? key : path + "." + key, "missing field");
    }
    return j.at(key);
}

int int_from(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        throw SceneError(path, "expected an integer");
    }
    return j.get<int>();
}

}  // namespace

void validate(const SceneSpec& s) {
    if (s.schema_version != 1) {
        throw SceneError("schema_version", "unsupported version " + std::to_string(s.schema_version));
    }
    if (s.id.empty()) {
        throw SceneError("id", "must not be empty");
    }
    std::optional<CurveProfile> curve;
    try {
        curve.emplace(s.curve());
    } catch (const Error& e) {
        throw SceneError("curve", e.what());
    }
    if (!(s.subrange.lo < s.subrange.hi)) {
        throw SceneError("subrange", "needs a' < b'");
    }
    if (s.subrange.lo < curve->a() || s.subrange.hi > curve->b()) {
        throw SceneError("subrange", "must lie inside the curve's [a, b]");
    }
    if (s.a_small.empty()) {
        throw SceneError("A_small", "needs at least one interval");
    }
    if (!(s.a_cover.lo < s.a_cover.hi)) {
        throw SceneError("A_cover", "needs lo < hi");
    }
    for (std::size_t i = 0; i < s.a_small.size(); ++i) {
        const std::string path = "A_small[" + std::to_string(i) + "]";
        const Interval c = s.a_small[i];
        if (c.lo > c.hi) {
            throw SceneError(path, "interval has lo > hi");
        }
        if (c.lo <= s.a_cover.hi && s.a_cover.lo <= c.hi) {
            throw SceneError(path, "overlaps A_cover");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (c.lo <= s.a_small[k].hi && s.a_small[k].lo <= c.hi) {
                throw SceneError(path, "overlaps A_small[" + std::to_string(k) + "]");
            }
        }
    }
    bool holds_alpha0 = false;
    for (const Interval& c : s.a_small) {
        holds_alpha0 = holds_alpha0 || c.contains(s.y.x1);
    }
    if (!holds_alpha0) {
        throw SceneError("y", "y[0] must lie in some A_small interval");
    }
    if (!(s.epsilon > 0.0)) {
        throw SceneError("epsilon", "must be positive");
    }
    if (!(s.delta > 0.0)) {
        throw SceneError("delta", "must be positive");
    }
    if (s.alpha_points < 2) {
        throw SceneError("grids.alpha_points", "must be at least 2");
    }
    if (s.segment_points < 2) {
        throw SceneError("grids.segment_points", "must be at least 2");
    }
    if (s.n_max < 1) {
        throw SceneError("caps.N_max", "must be at least 1");
    }
    if (s.m_max < 1) {
        throw SceneError("caps.m_max", "must be at least 1");
    }
}

SceneSpec parse_scene(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SceneError("scene", std::string("malformed JSON: ") + e.what());
    }
    SceneSpec s;
    s.schema_version = int_from(field(j, "schema_version"), "schema_version");
    const json& id = field(j, "id");
    if (!id.is_string()) {
        throw SceneError("id", "expected a string");
    }
    s.id = id.get<std::string>();
    const json& curve = field(j, "curve");
    const json& name = field(curve, "name", "curve");
    if (!name.is_string()) {
        throw SceneError("curve.name", "expected a string");
    }
    s.curve_name = name.get<std::string>();
    if (curve.contains("domain")) {
        s.curve_domain = interval_from(curve.at("domain"), "curve.domain");
    }
    s.y = detail::point_from(field(j, "y"), "y");
    s.subrange = interval_from(field(j, "subrange"), "subrange");
    const json& small = field(j, "A_small");
    if (!small.is_array()) {
        throw SceneError("A_small", "expected a list of intervals");
    }
    for (std::size_t i = 0; i < small.size(); ++i) {
        s.a_small.push_back(interval_from(small[i], "A_small[" + std::to_string(i) + "]"));
    }
    s.a_cover = interval_from(field(j, "A_cover"), "A_cover");
    s.epsilon = detail::number_at(field(j, "epsilon"), "epsilon");
    s.delta = detail::number_at(field(j, "delta"), "delta");
    if (j.contains("grids")) {
        const json& g = j.at("grids");
        if (g.contains("alpha_points")) {
            s.alpha_points = int_from(g.at("alpha_points"), "grids.alpha_points");
        }
        if (g.contains("segment_points")) {
            s.segment_points = int_from(g.at("segment_points"), "grids.segment_points");
        }
    }
    if (j.contains("caps")) {
        const json& c = j.at("caps");
        if (c.contains("N_max")) {
            s.n_max = int_from(c.at("N_max"), "caps.N_max");
        }
        if (c.contains("m_max")) {
            s.m_max = int_from(c.at("m_max"), "caps.m_max");
        }
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !j.at("seed").is_number_integer()) {
            throw SceneError("seed", "expected a non-negative integer");
        }
        s.seed = j.at("seed").get<std::uint64_t>();
    }
    validate(s);
    return s;
}

SceneSpec load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SceneError(path, "cannot open scene file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scene(buf.str());
}

std::string serialize_scene(const SceneSpec& s) {
    json curve{{"name", s.curve_name}};
    if (s.curve_domain) {
        curve["domain"] = interval_json(*s.curve_domain);
    }
    json small = json::array();
    for (const Interval& c : s.a_small) {
        small.push_back(interval_json(c));
    }
    const json out{{"schema_version", s.schema_version},
                   {"id", s.id},
                   {"curve", curve},
                   {"y", detail::point_json(s.y)},
                   {"subrange", interval_json(s.subrange)},
                   {"A_small", small},
                   {"A_cover", interval_json(s.a_cover)},
                   {"epsilon", s.epsilon},
                   {"delta", s.delta},
                   {"grids", json{{"alpha_points", s.alpha_points}, {"segment_points", s.segment_points}}},
                   {"caps", json{{"N_max", s.n_max}, {"m_max", s.m_max}}},
                   {"seed", s.seed}};
    return detail::emit(out);
}

}  // namespace vblind
