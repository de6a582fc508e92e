#include "json_detail.hpp"
#include "vblind/blinds.hpp"
#include "vblind/cli.hpp"
#include "vblind/errors.hpp"

namespace vblind {

ConstructOutput run_construct(const SceneSpec& scene, const ConstructOptions& options) {
    SceneSpec spec = scene;
    if (options.grid_alpha) {
        spec.alpha_points = *options.grid_alpha;
    }
    if (options.seed) {
        spec.seed = *options.seed;
    }
    validate(spec);
    const CurveProfile curve = spec.curve();
    const AlphaSet cover = spec.cover_set();

    KeyOptions ko;
    ko.n_max = spec.n_max;
    ko.m_max = spec.m_max;
    ko.region_samples = spec.segment_points;
    ConstructOutput out{key_construction(curve, spec.y, spec.subrange, spec.small_set(), cover,
                                         spec.epsilon, spec.delta, ko),
                        {}, {}, false, {}, {}};
    const KeyConstruction& kc = out.construction;
    out.cover = check_cover(curve, kc.blinds.segments, FiberArc{spec.y, spec.subrange}, cover,
                            1e-9, spec.id);
    out.small = check_small(curve, kc.blinds.segments, kc.small_set, spec.epsilon, spec.id);
    out.pass = out.cover.pass && out.small.pass;

    using detail::json;
    json blinds = detail::blindset_json(kc.blinds);
    blinds["scene_id"] = spec.id;
    blinds["curve"] = curve.name();
    json chain = json::array();
    for (const Point& p : kc.chain.vertices) {
        chain.push_back(detail::point_json(p));
    }
    blinds["chain"] = chain;
    out.blindset_json = detail::emit(blinds);

    const json report{
        {"scene_id", spec.id},
        {"pass", out.pass},
        {"seed", spec.seed},
        {"construction",
         json{{"segments", kc.blinds.segments.size()},
              {"chain_segments", kc.chain.vertices.size() - 1},
              {"total_length", kc.blinds.total_length()},
              {"internal_eps", kc.internal_eps},
              {"delta_used", kc.delta_used},
              {"attempts", kc.attempts}}},
        {"cover", detail::report_json(out.cover, options.rigorous)},
        {"small", detail::report_json(out.small, options.rigorous)}};
    out.report_json = detail::emit(report);
    return out;
}

}  // namespace vblind
