#include "vblind/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json_detail.hpp"
#include "vblind/errors.hpp"

namespace vblind {

namespace detail {

namespace {

bool flat(const json& v) {
    if (v.is_object()) {
        for (const auto& [k, x] : v.items()) {
            if (x.is_structured()) {
                return false;
            }
        }
        return true;
    }
    if (v.is_array()) {
        for (const json& x : v) {
            if (x.is_object() || (x.is_array() && !flat(x))) {
                return false;
            }
        }
        return true;
    }
    return true;
}

void write(std::ostringstream& os, const json& v, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (v.type()) {
        case json::value_t::number_float: {
            const double d = v.get<double>();
            if (!std::isfinite(d)) {
                throw NumericError("cannot write a non-finite number to JSON");
            }
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", d);
            os << buf;
            return;
        }
        case json::value_t::object: {
            if (v.empty()) {
                os << "{}";
                return;
            }
            const bool inline_form = flat(v);
            os << '{';
            bool first = true;
            for (const auto& [k, x] : v.items()) {
                os << (first ? "" : ",");
                if (inline_form) {
                    os << (first ? "" : " ");
                } else {
                    os << '\n' << inner;
                }
                os << json(k).dump() << ": ";
                write(os, x, indent + 1);
                first = false;
            }
            if (!inline_form) {
                os << '\n' << pad;
            }
            os << '}';
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                os << "[]";
                return;
            }
            const bool inline_form = flat(v);
            os << '[';
            bool first = true;
            for (const json& x : v) {
                os << (first ? "" : ",");
                if (inline_form) {
                    os << (first ? "" : " ");
                } else {
                    os << '\n' << inner;
                }
                write(os, x, indent + 1);
                first = false;
            }
            if (!inline_form) {
                os << '\n' << pad;
            }
            os << ']';
            return;
        }
        default:
            os << v.dump();
    }
}

const json& at(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) {
        throw SceneError(path + "." + key, "missing field");
    }
    return j.at(key);
}

Segment segment_from(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) {
        throw SceneError(path, "segment must be [[x1, x2], [x1, x2]]");
    }
    try {
        return Segment(point_from(j[0], path + "[0]"), point_from(j[1], path + "[1]"));
    } catch (const PreconditionError& e) {
        throw SceneError(path, e.what());
    }
}

json segment_json(const Segment& s) { return json::array({point_json(s.a()), point_json(s.b())}); }

json tree_json(const BranchTree& t) {
    json overrides = json::array();
    for (const auto& [idx, n] : t.overrides()) {
        overrides.push_back(json::array({idx, n}));
    }
    return json{{"per_level", t.per_level()}, {"overrides", overrides}};
}

BranchTree tree_from(const json& j, const std::string& path) {
    try {
        BranchTree t = BranchTree::uniform(at(j, "per_level", path).get<std::vector<int>>());
        for (const json& o : at(j, "overrides", path)) {
            t.set_branching(o.at(0).get<TreeIndex>(), o.at(1).get<int>());
        }
        return t;
    } catch (const json::exception& e) {
        throw SceneError(path, e.what());
    } catch (const PreconditionError& e) {
        throw SceneError(path, e.what());
    }
}

}  // namespace

std::string emit(const json& value) {
    std::ostringstream os;
    write(os, value, 0);
    os << '\n';
    return os.str();
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw SceneError(path, "expected a number");
    }
    const double d = j.get<double>();
    if (!std::isfinite(d)) {
        throw SceneError(path, "expected a finite number");
    }
    return d;
}

json point_json(Point p) { return json::array({p.x1, p.x2}); }

Point point_from(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) {
        throw SceneError(path, "point must be [x1, x2]");
    }
    return {number_at(j[0], path + "[0]"), number_at(j[1], path + "[1]")};
}

json blindset_json(const BlindSet& blinds) {
    json segs = json::array();
    for (const Segment& s : blinds.segments) {
        segs.push_back(segment_json(s));
    }
    json prov = json::array();
    for (const TreeIndex& idx : blinds.provenance) {
        prov.push_back(idx);
    }
    json meta = json::object();
    if (blinds.meta.theta_small) {
        meta["theta_small"] = blinds.meta.theta_small->radians();
    }
    if (blinds.meta.theta_cover) {
        meta["theta_cover"] = blinds.meta.theta_cover->radians();
    }
    if (blinds.meta.chirality) {
        meta["chirality"] = to_string(*blinds.meta.chirality);
    }
    if (blinds.meta.tree) {
        meta["tree"] = tree_json(*blinds.meta.tree);
    }
    meta["level_lengths"] = blinds.meta.level_lengths;
    json scaffold = json::array();
    for (const StagedSegment& s : blinds.scaffold) {
        scaffold.push_back(json{{"stage", s.stage}, {"segment", segment_json(s.segment)}});
    }
    return json{{"segments", segs}, {"provenance", prov}, {"meta", meta}, {"scaffold", scaffold}};
}

BlindSet blindset_from(const json& j) {
    BlindSet out;
    const json& segs = at(j, "segments", "blindset");
    if (!segs.is_array()) {
        throw SceneError("blindset.segments", "expected an array");
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
        out.segments.push_back(segment_from(segs[i], "blindset.segments[" + std::to_string(i) + "]"));
    }
    try {
        for (const json& idx : at(j, "provenance", "blindset")) {
            out.provenance.push_back(idx.get<TreeIndex>());
        }
    } catch (const json::exception& e) {
        throw SceneError("blindset.provenance", e.what());
    }
    if (out.provenance.size() != out.segments.size()) {
        throw SceneError("blindset.provenance", "needs one index per segment");
    }
    if (j.contains("meta")) {
        const json& m = j.at("meta");
        if (m.contains("theta_small")) {
            out.meta.theta_small = normalize(number_at(m.at("theta_small"), "blindset.meta.theta_small"));
        }
        if (m.contains("theta_cover")) {
            out.meta.theta_cover = normalize(number_at(m.at("theta_cover"), "blindset.meta.theta_cover"));
        }
        if (m.contains("chirality")) {
            const std::string c = m.at("chirality").get<std::string>();
            if (c != "counterclockwise" && c != "clockwise") {
                throw SceneError("blindset.meta.chirality", "unknown chirality '" + c + "'");
            }
            out.meta.chirality =
                c == "clockwise" ? Chirality::clockwise : Chirality::counterclockwise;
        }
        if (m.contains("tree")) {
            out.meta.tree = tree_from(m.at("tree"), "blindset.meta.tree");
        }
        if (m.contains("level_lengths")) {
            for (std::size_t i = 0; i < m.at("level_lengths").size(); ++i) {
                out.meta.level_lengths.push_back(number_at(
                    m.at("level_lengths")[i], "blindset.meta.level_lengths[" + std::to_string(i) + "]"));
            }
        }
    }
    if (j.contains("scaffold")) {
        const json& sc = j.at("scaffold");
        for (std::size_t i = 0; i < sc.size(); ++i) {
            const std::string path = "blindset.scaffold[" + std::to_string(i) + "]";
            out.scaffold.push_back({segment_from(at(sc[i], "segment", path), path + ".segment"),
                                    at(sc[i], "stage", path).get<int>()});
        }
    }
    return out;
}

json report_json(const VerificationReport& r, bool with_padding) {
    json rows = json::array();
    for (const AlphaRecord& a : r.per_alpha) {
        rows.push_back(json{{"alpha", a.alpha},
                            {"covered", a.covered},
                            {"deficit", a.deficit},
                            {"projected_measure", a.projected_measure}});
    }
    json out{{"scene_id", r.scene_id},
             {"kind", r.kind == ReportKind::cover ? "cover" : "small"},
             {"pass", r.pass},
             {"bound", r.bound},
             {"max_measure", r.max_measure},
             {"worst_case",
              json{{"alpha", r.worst_case.alpha}, {"witness", point_json(r.worst_case.witness)}}}};
    if (with_padding) {
        out["padding"] = r.padding;
        out["padding_certified"] = r.padding_certified;
    }
    out["per_alpha"] = rows;
    return out;
}

VerificationReport report_from(const json& j) {
    VerificationReport r;
    try {
        r.scene_id = at(j, "scene_id", "report").get<std::string>();
        const std::string kind = at(j, "kind", "report").get<std::string>();
        if (kind != "cover" && kind != "small") {
            throw SceneError("report.kind", "expected 'cover' or 'small'");
        }
        r.kind = kind == "cover" ? ReportKind::cover : ReportKind::small;
        r.pass = at(j, "pass", "report").get<bool>();
        r.bound = number_at(at(j, "bound", "report"), "report.bound");
        r.max_measure = number_at(at(j, "max_measure", "report"), "report.max_measure");
        const json& w = at(j, "worst_case", "report");
        r.worst_case.alpha = number_at(at(w, "alpha", "report.worst_case"), "report.worst_case.alpha");
        r.worst_case.witness = point_from(at(w, "witness", "report.worst_case"), "report.worst_case.witness");
        if (j.contains("padding")) {
            r.padding = number_at(j.at("padding"), "report.padding");
            r.padding_certified = at(j, "padding_certified", "report").get<bool>();
        }
        for (const json& row : at(j, "per_alpha", "report")) {
            r.per_alpha.push_back({number_at(at(row, "alpha", "report.per_alpha"), "report.per_alpha.alpha"),
                                   at(row, "covered", "report.per_alpha").get<bool>(),
                                   number_at(at(row, "deficit", "report.per_alpha"), "report.per_alpha.deficit"),
                                   number_at(at(row, "projected_measure", "report.per_alpha"),
                                             "report.per_alpha.projected_measure")});
        }
    } catch (const json::exception& e) {
        throw SceneError("report", e.what());
    }
    return r;
}

}  // namespace detail

namespace {

detail::json parse_text(std::string_view text, const std::string& what) {
    try {
        return detail::json::parse(text);
    } catch (const detail::json::parse_error& e) {
        throw SceneError(what, std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

std::string to_json(const IntervalUnion& u) {
    detail::json arr = detail::json::array();
    for (const Interval& c : u.intervals()) {
        arr.push_back(detail::json::array({c.lo, c.hi}));
    }
    return detail::emit(arr);
}

std::string to_json(const BlindSet& blinds) { return detail::emit(detail::blindset_json(blinds)); }

std::string to_json(const VerificationReport& report, bool with_padding) {
    return detail::emit(detail::report_json(report, with_padding));
}

BlindSet blindset_from_json(std::string_view text) {
    return detail::blindset_from(parse_text(text, "blindset"));
}

VerificationReport report_from_json(std::string_view text) {
    return detail::report_from(parse_text(text, "report"));
}

IntervalUnion interval_union_from_json(std::string_view text) {
    const detail::json j = parse_text(text, "intervals");
    std::vector<Interval> parts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = "intervals[" + std::to_string(i) + "]";
        parts.push_back({detail::number_at(j[i].at(0), path + "[0]"),
                         detail::number_at(j[i].at(1), path + "[1]")});
    }
    return IntervalUnion::union_of(std::move(parts));
}

}  // namespace vblind
