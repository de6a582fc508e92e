#include "vblind/keylemma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "internal.hpp"
#include "vblind/errors.hpp"

namespace vblind {

std::vector<Segment> PolyChain::segments() const {
    std::vector<Segment> out;
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        out.emplace_back(vertices[i - 1], vertices[i]);
    }
    return out;
}

IntervalUnion fiber_projection(const CurveProfile& curve, Point y, Interval subrange,
                               double alpha) {
    const double s = alpha - y.x1;
    if (s < curve.a() - subrange.hi || s > curve.b() - subrange.lo) {
        return {};
    }
    const Interval d = diff_interval(curve, subrange, s);
    return IntervalUnion::union_of({{y.x2 + d.lo, y.x2 + d.hi}});
}

double distance_to_fiber(const CurveProfile& curve, Point y, Interval subrange, Point p) {
    const auto neg = [&](double t) { return -distance(p, fiber_point(curve, y, t)); };
    return -detail::seeded_max(neg, subrange.lo, subrange.hi);
}

Interval alpha_reach(const CurveProfile& curve, Point y, Interval subrange, double r) {
    const double x1_lo = y.x1 - subrange.hi - r;
    const double x1_hi = y.x1 - subrange.lo + r;
    return {x1_lo + curve.a(), x1_hi + curve.b()};
}

namespace {

void check_subrange(const CurveProfile& curve, Interval subrange) {
    if (!(subrange.lo < subrange.hi)) {
        throw PreconditionError("fiber subrange must have a' < b'");
    }
    if (subrange.lo < curve.a() || subrange.hi > curve.b()) {
        throw PreconditionError("fiber subrange must lie inside [a, b]");
    }
}

}  // namespace

PolyChain tangent_chain(const CurveProfile& curve, Point y, Interval subrange, int points) {
    check_subrange(curve, subrange);
    if (points < 2) {
        throw PreconditionError("tangent chain needs at least 2 tangency points");
    }
    PolyChain chain;
    chain.y = y;
    chain.subrange = subrange;
    const int n = points;
    for (int i = 0; i < n; ++i) {
        chain.tangency_params.push_back(
            i == n - 1 ? subrange.hi : subrange.lo + subrange.length() * i / (n - 1));
    }
    // In x1 coordinates the arc is the graph of h(u) = y2 - f(alpha0 - u), h'(u) = f'(alpha0 - u).
    const auto tangent = [&](double t) {
        const Point p = fiber_point(curve, y, t);
        return std::pair{p, curve.df(t)};
    };
    chain.vertices.push_back(fiber_point(curve, y, chain.tangency_params.front()));
    for (int i = 0; i + 1 < n; ++i) {
        const auto [p, mp] = tangent(chain.tangency_params[i]);
        const auto [q, mq] = tangent(chain.tangency_params[i + 1]);
        const double x = p.x1 + (q.x2 - p.x2 - mq * (q.x1 - p.x1)) / (mp - mq);
        chain.vertices.push_back({x, p.x2 + mp * (x - p.x1)});
    }
    chain.vertices.push_back(fiber_point(curve, y, chain.tangency_params.back()));
    return chain;
}

double tangency_residual(const CurveProfile& curve, const PolyChain& chain) {
    double worst = 0.0;
    const std::vector<Segment> segs = chain.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Direction tangent = normalize(curve.slope_angle(chain.tangency_params[i]));
        worst = std::max(worst, dist(segs[i].direction(), tangent));
    }
    return worst;
}

double chain_fiber_distance(const CurveProfile& curve, const PolyChain& chain) {
    double worst = 0.0;
    for (std::size_t i = 0; i < chain.vertices.size(); ++i) {
        worst = std::max(worst,
                         distance_to_fiber(curve, chain.y, chain.subrange, chain.vertices[i]));
        if (i > 0) {
            const Point mid = 0.5 * (chain.vertices[i - 1] + chain.vertices[i]);
            worst = std::max(worst, distance_to_fiber(curve, chain.y, chain.subrange, mid));
        }
    }
    return worst;
}

PolyChain polygon_approx(const CurveProfile& curve, Point y, Interval subrange, double eps,
                         double delta, const PolygonOptions& options) {
    check_subrange(curve, subrange);
    if (!(eps > 0.0 && delta > 0.0)) {
        throw PreconditionError("polygon approximation needs eps, delta > 0");
    }
    const Interval reach = alpha_reach(curve, y, subrange, delta);
    const double n_box = std::max(std::fabs(reach.lo), std::fabs(reach.hi));
    const AlphaSet grid_set = AlphaSet::with_points({{-n_box, n_box}}, options.alpha_points);
    const std::vector<double> alphas = grid_set.grid();
    for (long long n = std::max(options.n0, 2); n <= options.n_max; n = 2 * n - 1) {
        PolyChain chain = tangent_chain(curve, y, subrange, static_cast<int>(n));
        const std::vector<Segment> segs = chain.segments();
        const bool short_enough = std::all_of(segs.begin(), segs.end(),
                                              [&](const Segment& s) { return s.length() < eps; });
        if (!short_enough || chain_fiber_distance(curve, chain) >= delta) {
            continue;
        }
        const bool covers = std::all_of(alphas.begin(), alphas.end(), [&](double alpha) {
            return project_blinds(curve, alpha, segs)
                .contains(fiber_projection(curve, y, subrange, alpha), 1e-9);
        });
        if (covers) {
            return chain;
        }
    }
    throw SearchError("polygon approximation", "cap of " + std::to_string(options.n_max) +
                                                   " tangency points reached");
}

AngleBands compute_bands(const CurveProfile& curve, const Region& region, const AlphaSet& a_small,
                         const AlphaSet& a_cover) {
    if (!a_cover.is_interval()) {
        throw PreconditionError("cover set must be a single interval");
    }
    if (!a_small.disjoint_from(a_cover)) {
        throw PreconditionError("small and cover sets must be disjoint");
    }
    if (region.samples.empty() || region.radius < 0.0) {
        throw PreconditionError("region needs samples and a non-negative radius");
    }
    const auto [xmin, xmax] = std::minmax_element(
        region.samples.begin(), region.samples.end(),
        [](Point p, Point q) { return p.x1 < q.x1; });
    const Interval xs{xmin->x1 - region.radius, xmax->x1 + region.radius};
    const Interval cover = a_cover.hull();
    if (!(xs.lo > cover.hi - curve.b() && xs.hi < cover.lo - curve.a())) {
        throw PreconditionError("region leaves the open strip for some cover alpha");
    }
    constexpr int kXSamples = 128;
    std::vector<double> x1s(kXSamples);
    for (int i = 0; i < kXSamples; ++i) {
        x1s[i] = i == kXSamples - 1 ? xs.hi : xs.lo + xs.length() * i / (kXSamples - 1);
    }
    const double x_step = xs.length() / (kXSamples - 1);
    const double t_slack = (a_cover.grid_step() + a_small.grid_step()) / 2.0 + x_step / 2.0;
    const double pad =
        curve.theta_lipschitz() * (std::max(a_cover.grid_step(), a_small.grid_step()) / 2.0 +
                                   x_step / 2.0);

    double clo = std::numeric_limits<double>::infinity();
    double chi = -clo;
    for (double alpha : a_cover.grid()) {
        for (double x1 : x1s) {
            const double v = curve.slope_angle(alpha - x1);
            clo = std::min(clo, v);
            chi = std::max(chi, v);
        }
    }
    clo -= pad;
    chi += pad;

    double slo = std::numeric_limits<double>::infinity();
    double shi = -slo;
    double worst_gap = std::numeric_limits<double>::infinity();
    double worst_small = 0.0;
    for (double alpha : a_small.grid()) {
        for (double x1 : x1s) {
            const double t = alpha - x1;
            if (t < curve.a() - t_slack || t > curve.b() + t_slack) {
                continue;
            }
            double v = curve.slope_angle(std::clamp(t, curve.a(), curve.b()));
            if (v < clo) {
                v += kPi;
            }
            const double gap = std::min(v - chi, clo + kPi - v);
            if (gap < worst_gap) {
                worst_gap = gap;
                worst_small = v;
            }
            slo = std::min(slo, v);
            shi = std::max(shi, v);
        }
    }
    if (!(slo <= shi)) {
        throw PreconditionError("no small-set direction is defined on the region");
    }
    slo -= pad;
    shi += pad;
    const double eps0 = std::min(slo - chi, clo + kPi - shi);
    if (!(eps0 > 0.0)) {
        const double cover_near = worst_small - chi < clo + kPi - worst_small ? chi : clo;
        throw SeparationError("cover and small direction sets are not separated (gap " +
                                  std::to_string(eps0) + ")",
                              normalize(cover_near).radians(), normalize(worst_small).radians());
    }
    return AngleBands{normalize(clo), normalize(chi), normalize(slo), normalize(shi), eps0};
}

namespace {

void append_local(BlindSet& into, const BlindSet& part, int prefix) {
    for (std::size_t i = 0; i < part.segments.size(); ++i) {
        into.segments.push_back(part.segments[i]);
        TreeIndex idx{prefix};
        idx.insert(idx.end(), part.provenance[i].begin(), part.provenance[i].end());
        into.provenance.push_back(std::move(idx));
    }
}

}  // namespace

BlindSet local_construction(const CurveProfile& curve, const Segment& seg,
                            const AngleBands& bands, const AlphaSet& a_small,
                            const AlphaSet& a_cover, double eps, double delta,
                            const LocalOptions& options) {
    if (!(seg.length() < eps)) {
        throw PreconditionError("local construction needs |L| < eps");
    }
    if (!arc_interior_contains(bands.small_arc(), seg.direction())) {
        throw PreconditionError("segment direction is not inside the small band");
    }
    CoverSearchOptions first;
    first.n0 = 1;
    first.n_max = options.n_max;
    first.neighborhood = delta / 2.0;
    first.max_blind_length = eps;
    CoverSearchResult step1;
    try {
        step1 = auto_vb_cover(curve, seg, bands.small_lo, bands.cover_hi, a_cover, first);
    } catch (const SearchError& e) {
        throw SearchError("local construction step 1 / " + e.stage(), e.what(), e.alpha(),
                          e.piece(), 1);
    }

    IterSearchOptions second;
    second.n_max = options.n_max;
    second.m_max = options.m_max;
    second.neighborhood = delta / 2.0;

    BlindSet out;
    out.scaffold.push_back({seg, 0});
    for (std::size_t j = 0; j < step1.blinds.segments.size(); ++j) {
        const Segment& blade = step1.blinds.segments[j];
        out.scaffold.push_back({blade, 1});
        BlindSet part;
        try {
            part = auto_iter_vb(curve, blade, bands.small_hi, bands.cover_lo, eps, a_small,
                                a_cover, Chirality::counterclockwise, second);
        } catch (const SearchError& e) {
            throw SearchError("local construction step 2 / " + e.stage(),
                              std::string("blind ") + std::to_string(j) + ": " + e.what(),
                              e.alpha(), static_cast<long>(j), 2 + e.deepest_stage());
        }
        for (const StagedSegment& s : part.scaffold) {
            if (s.stage > 0) {
                out.scaffold.push_back({s.segment, s.stage + 1});
            }
        }
        append_local(out, part, static_cast<int>(j));
    }
    out.meta.level_lengths = {seg.length(), step1.blinds.total_length(), out.total_length()};
    return out;
}

KeyConstruction key_construction(const CurveProfile& curve, Point y, Interval subrange,
                                 const AlphaSet& a_small, const AlphaSet& a_cover, double eps,
                                 double delta, const KeyOptions& options) {
    check_subrange(curve, subrange);
    if (!(eps > 0.0 && delta > 0.0)) {
        throw PreconditionError("key construction needs eps, delta > 0");
    }
    if (!a_cover.is_interval()) {
        throw PreconditionError("cover set must be a single interval");
    }
    if (!a_small.disjoint_from(a_cover)) {
        throw PreconditionError("small and cover sets must be disjoint");
    }
    if (!a_small.contains(y.x1)) {
        throw PreconditionError("y.x1 must belong to the small set");
    }
    const Interval cover = a_cover.hull();
    const double x1_lo = y.x1 - subrange.hi;
    const double x1_hi = y.x1 - subrange.lo;
    const double clearance =
        std::min(x1_lo - (cover.hi - curve.b()), (cover.lo - curve.a()) - x1_hi);
    if (!(clearance > 0.0)) {
        throw PreconditionError("fiber arc is not inside the open strip for every cover alpha");
    }
    const double delta_eff = std::min(delta, clearance / 2.0);
    const Interval reach = alpha_reach(curve, y, subrange, delta_eff);
    const double n_box = std::max(std::fabs(reach.lo), std::fabs(reach.hi));
    const std::optional<AlphaSet> clipped = a_small.intersect({-n_box, n_box});
    if (!clipped) {
        throw PreconditionError("small set misses [-N_box, N_box]");
    }
    const AlphaSet& small = *clipped;
    const std::vector<double> small_grid = small.grid();

    PolygonOptions poly;
    poly.alpha_points = options.polygon_alpha_points;
    LocalOptions local;
    local.n_max = options.n_max;
    local.m_max = options.m_max;

    double eps_int = eps;
    for (int attempt = 1; attempt <= options.max_halvings + 1; ++attempt, eps_int /= 2.0) {
        const PolyChain chain = polygon_approx(curve, y, subrange, eps_int, delta_eff / 2.0, poly);
        const std::vector<Segment> segs = chain.segments();
        const double local_delta = std::min(delta_eff / 2.0, eps_int);
        std::vector<BlindSet> parts(segs.size());
        try {
            detail::parallel_for(segs.size(), [&](std::size_t i) {
                Region region;
                const int samples = std::max(options.region_samples, 2);
                for (int k = 0; k < samples; ++k) {
                    region.samples.push_back(
                        segs[i].point_at(static_cast<double>(k) / (samples - 1)));
                }
                region.radius = local_delta;
                const AngleBands bands = compute_bands(curve, region, small, a_cover);
                if (!arc_interior_contains(bands.small_arc(), segs[i].direction())) {
                    throw SearchError("key construction",
                                      "chain segment " + std::to_string(i) +
                                          " direction is outside the small band",
                                      y.x1, static_cast<long>(i));
                }
                parts[i] = local_construction(curve, segs[i], bands, small, a_cover, eps_int,
                                              local_delta, local);
            });
        } catch (const SeparationError&) {
            continue;
        }
        KeyConstruction out{BlindSet{}, chain, small, eps_int, delta_eff, attempt};
        for (std::size_t i = 0; i < parts.size(); ++i) {
            append_local(out.blinds, parts[i], static_cast<int>(i));
            out.blinds.scaffold.insert(out.blinds.scaffold.end(), parts[i].scaffold.begin(),
                                       parts[i].scaffold.end());
        }
        std::vector<double> measures(small_grid.size());
        detail::parallel_for(small_grid.size(), [&](std::size_t k) {
            measures[k] = project_blinds(curve, small_grid[k], out.blinds.segments).measure();
        });
        if (*std::max_element(measures.begin(), measures.end()) < eps) {
            return out;
        }
    }
    throw SearchError("key construction",
                      "no internal eps down to " + std::to_string(eps_int * 2.0) +
                          " met the separation and smallness requirements");
}

}  // namespace vblind
