#include "vblind/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "internal.hpp"
#include "vblind/errors.hpp"
#include "vblind/keylemma.hpp"

namespace vblind {

namespace {

enum class StripRelation { inside, outside, crossing };

// How a segment sits relative to the strip for every alpha in the window.
StripRelation strip_relation(const CurveProfile& curve, const Segment& s, Interval window) {
    const double lo = std::min(s.a().x1, s.b().x1);
    const double hi = std::max(s.a().x1, s.b().x1);
    if (lo > window.hi - curve.b() && hi < window.lo - curve.a()) {
        return StripRelation::inside;
    }
    if (hi < window.lo - curve.b() || lo > window.hi - curve.a()) {
        return StripRelation::outside;
    }
    return StripRelation::crossing;
}

std::vector<Interval> grid_windows(const AlphaSet& alphas, const std::vector<double>& grid) {
    std::vector<Interval> out;
    out.reserve(grid.size());
    const double half = alphas.grid_step() / 2.0;
    for (double a : grid) {
        out.push_back({a - half, a + half});
    }
    return out;
}

}  // namespace

IntervalUnion project_target(const CurveProfile& curve, const CoverTarget& target, double alpha) {
    if (const auto* seg = std::get_if<Segment>(&target)) {
        return project_segment(curve, alpha, *seg);
    }
    const auto& arc = std::get<FiberArc>(target);
    return fiber_projection(curve, arc.y, arc.subrange, alpha);
}

VerificationReport check_cover(const CurveProfile& curve, std::span<const Segment> blinds,
                               const CoverTarget& target, const AlphaSet& alphas, double margin,
                               std::string scene_id) {
    if (margin < 0.0) {
        throw PreconditionError("cover margin must be non-negative");
    }
    const std::vector<double> grid = alphas.grid();
    const std::vector<Interval> windows = grid_windows(alphas, grid);
    const double r = curve.df_bound() * alphas.grid_step() / 2.0;

    VerificationReport rep;
    rep.scene_id = std::move(scene_id);
    rep.kind = ReportKind::cover;
    rep.bound = margin;
    rep.padding = alphas.grid_step() / 2.0;
    rep.per_alpha.resize(grid.size());
    std::vector<char> certified(grid.size(), 0);
    std::vector<double> witness(grid.size(), 0.0);

    detail::parallel_for(grid.size(), [&](std::size_t k) {
        const double alpha = grid[k];
        std::vector<Interval> parts;
        std::vector<Interval> lower;
        for (const Segment& s : blinds) {
            bool hit = false;
            const Interval iv = project_segment_interval(curve, alpha, s, hit);
            if (!hit) {
                continue;
            }
            parts.push_back(iv);
            if (strip_relation(curve, s, windows[k]) == StripRelation::inside &&
                iv.lo + r <= iv.hi - r) {
                lower.push_back({iv.lo + r, iv.hi - r});
            }
        }
        const IntervalUnion image = IntervalUnion::union_of(std::move(parts));
        const IntervalUnion want = project_target(curve, target, alpha);
        AlphaRecord& rec = rep.per_alpha[k];
        rec.alpha = alpha;
        const auto missing = image.uncovered_point(want, margin);
        rec.covered = !missing.has_value();
        rec.deficit = image.uncovered_measure(want);
        rec.projected_measure = image.measure();
        witness[k] = missing ? *missing
                             : (want.empty() ? 0.0 : want.intervals().front().lo);

        // Upper bound for the target over the window.
        std::optional<IntervalUnion> upper;
        if (const auto* seg = std::get_if<Segment>(&target)) {
            switch (strip_relation(curve, *seg, windows[k])) {
                case StripRelation::inside: upper = want.expanded(r); break;
                case StripRelation::outside: upper = IntervalUnion{}; break;
                case StripRelation::crossing: break;
            }
        } else {
            const auto& arc = std::get<FiberArc>(target);
            const Interval reach = alpha_reach(curve, arc.y, arc.subrange, 0.0);
            if (!want.empty()) {
                // a clipped endpoint moves by at most 3 df_bound per unit alpha
                upper = want.expanded(3.0 * r);
            } else if (windows[k].hi < reach.lo || windows[k].lo > reach.hi) {
                upper = IntervalUnion{};
            }
        }
        certified[k] =
            upper && IntervalUnion::union_of(std::move(lower)).contains(*upper, margin) ? 1 : 0;
    });

    std::size_t worst = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const AlphaRecord& rec = rep.per_alpha[k];
        rep.pass = rep.pass && rec.covered;
        rep.max_measure = std::max(rep.max_measure, rec.projected_measure);
        const AlphaRecord& cur = rep.per_alpha[worst];
        if ((!rec.covered && cur.covered) ||
            (rec.covered == cur.covered && rec.deficit > cur.deficit)) {
            worst = k;
        }
    }
    rep.padding_certified =
        std::all_of(certified.begin(), certified.end(), [](char c) { return c != 0; });
    if (!grid.empty()) {
        rep.worst_case = {grid[worst], {grid[worst], witness[worst]}};
    }
    return rep;
}

VerificationReport check_small(const CurveProfile& curve, std::span<const Segment> blinds,
                               const AlphaSet& alphas, double bound, std::string scene_id) {
    if (!(bound > 0.0)) {
        throw PreconditionError("smallness bound must be positive");
    }
    const std::vector<double> grid = alphas.grid();
    const std::vector<Interval> windows = grid_windows(alphas, grid);
    const double r = curve.df_bound() * alphas.grid_step() / 2.0;

    VerificationReport rep;
    rep.scene_id = std::move(scene_id);
    rep.kind = ReportKind::small;
    rep.bound = bound;
    rep.padding = alphas.grid_step() / 2.0;
    rep.per_alpha.resize(grid.size());
    std::vector<char> certified(grid.size(), 0);
    std::vector<double> top(grid.size(), 0.0);

    detail::parallel_for(grid.size(), [&](std::size_t k) {
        const double alpha = grid[k];
        const IntervalUnion image = project_blinds(curve, alpha, blinds);
        AlphaRecord& rec = rep.per_alpha[k];
        rec.alpha = alpha;
        rec.projected_measure = image.measure();
        rec.covered = rec.projected_measure < bound;
        rec.deficit = std::max(0.0, rec.projected_measure - bound);
        top[k] = image.empty() ? 0.0 : image.intervals().back().hi;
        const bool clean = std::none_of(blinds.begin(), blinds.end(), [&](const Segment& s) {
            return strip_relation(curve, s, windows[k]) == StripRelation::crossing;
        });
        // each image endpoint moves by at most r across the window
        certified[k] = clean && image.expanded(r).measure() < bound ? 1 : 0;
    });

    std::size_t worst = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const AlphaRecord& rec = rep.per_alpha[k];
        rep.pass = rep.pass && rec.covered;
        if (rec.projected_measure > rep.per_alpha[worst].projected_measure) {
            worst = k;
        }
    }
    rep.padding_certified =
        std::all_of(certified.begin(), certified.end(), [](char c) { return c != 0; });
    if (!grid.empty()) {
        rep.max_measure = rep.per_alpha[worst].projected_measure;
        rep.worst_case = {grid[worst], {grid[worst], top[worst]}};
    }
    return rep;
}

double gradient_check(const CurveProfile& curve, int samples, double h, std::uint64_t seed) {
    if (!(h > 0.0)) {
        throw PreconditionError("finite-difference step must be positive");
    }
    std::mt19937_64 rng(seed);
    const double inset = std::max(10.0 * h, 1e-3 * (curve.b() - curve.a()));
    std::uniform_real_distribution<double> alpha_dist(-1.0, 1.0);
    std::uniform_real_distribution<double> t_dist(curve.a() + inset, curve.b() - inset);
    std::uniform_real_distribution<double> x2_dist(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double alpha = alpha_dist(rng);
        const Point x{alpha - t_dist(rng), x2_dist(rng)};
        const Point g = grad_phi(curve, alpha, x);
        const double d1 = (eval_phi(curve, alpha, {x.x1 + h, x.x2}) -
                           eval_phi(curve, alpha, {x.x1 - h, x.x2})) /
                          (2.0 * h);
        const double d2 = (eval_phi(curve, alpha, {x.x1, x.x2 + h}) -
                           eval_phi(curve, alpha, {x.x1, x.x2 - h})) /
                          (2.0 * h);
        worst = std::max(worst, std::hypot(d1 - g.x1, d2 - g.x2) / norm(g));
    }
    return worst;
}

double law_of_sines_check(int trials, std::uint64_t seed, Chirality chirality) {
    if (trials < 1) {
        throw PreconditionError("law of sines check needs at least one trial");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
        const Direction cover = normalize(kPi * unit(rng));
        const double span = 0.1 + (kPi - 0.2) * unit(rng);
        const double offset = span * (0.05 + 0.9 * unit(rng));
        const Direction small = advance(cover, span, chirality);
        const Direction line = advance(cover, offset, chirality);
        const double len = 0.1 + 1.9 * unit(rng);
        const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
        const Point a{2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0};
        const Point b = a + (sign * len) * Point{std::cos(line.radians()), std::sin(line.radians())};
        const Segment seg(a, b);
        const double expected =
            std::sin(dist(seg.direction(), cover)) / std::sin(dist(small, cover)) * seg.length();
        const double got = rotate(seg, small, cover).length();
        worst = std::max(worst, std::fabs(got - expected) / expected);
    }
    return worst;
}

double telescoping_check(int configurations, int max_depth, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> depth_dist(1, max_depth);
    std::uniform_int_distribution<int> branch_dist(1, 3);
    double worst = 0.0;
    for (int c = 0; c < configurations; ++c) {
        const Chirality chir = c % 2 == 0 ? Chirality::counterclockwise : Chirality::clockwise;
        const Direction cover = normalize(kPi * unit(rng));
        const double span = 0.3 + (kPi - 0.6) * unit(rng);
        const double offset = span * (0.1 + 0.6 * unit(rng));
        const Direction small = advance(cover, span, chir);
        const Direction line = advance(cover, offset, chir);
        const Point a{unit(rng), unit(rng)};
        const Segment seg(a, a + Point{std::cos(line.radians()), std::sin(line.radians())});
        std::vector<int> per_level(static_cast<std::size_t>(depth_dist(rng)));
        for (int& n : per_level) {
            n = branch_dist(rng);
        }
        const BranchTree tree = BranchTree::uniform(per_level);
        const BlindSet out = iter_vb(seg, small, cover, tree, chir);
        const std::vector<Direction> schedule =
            angle_schedule(seg.direction(), small, tree.depth(), chir);
        for (std::size_t k = 0; k < out.meta.level_lengths.size(); ++k) {
            const double expected = std::sin(dist(schedule[0], cover)) /
                                    std::sin(dist(schedule[k], cover)) * seg.length();
            worst = std::max(worst, std::fabs(out.meta.level_lengths[k] - expected));
        }
    }
    return worst;
}

DiskTrialResult disk_image_trial(const CurveProfile& curve, double alpha, const Disk& disk,
                                 int samples, std::uint64_t seed) {
    DiskTrialResult res;
    res.image = project_disk(curve, alpha, disk);
    const Interval strip = domain_strip(curve, alpha);
    const double lo = std::max(disk.center.x1 - disk.radius, strip.lo);
    const double hi = std::min(disk.center.x1 + disk.radius, strip.hi);
    const double rho = disk.radius * (1.0 - 1e-9);
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = -vmin;
    const auto take = [&](Point p) {
        const double v = eval_phi(curve, alpha, p);
        vmin = std::min(vmin, v);
        vmax = std::max(vmax, v);
    };
    // Near-boundary points (just inside the circle) on a column grid over the
    // clipped x1 range, a finer column grid around the best top and bottom
    // columns, then uniform interior points.
    const auto half_at = [&](double x1) {
        const double d = x1 - disk.center.x1;
        return std::sqrt(std::max(0.0, rho * rho - d * d));
    };
    const int columns = std::max(3, samples / 4);
    const int fine = std::max(3, samples / 10);
    double best_top = -std::numeric_limits<double>::infinity();
    double best_bottom = std::numeric_limits<double>::infinity();
    double top_x = lo;
    double bottom_x = lo;
    const double step = (hi - lo) / (columns - 1);
    for (int i = 0; i < columns; ++i) {
        const double x1 = i == columns - 1 ? hi : lo + step * i;
        const double h = half_at(x1);
        const double up = eval_phi(curve, alpha, {x1, disk.center.x2 + h});
        const double down = eval_phi(curve, alpha, {x1, disk.center.x2 - h});
        take({x1, disk.center.x2 + h});
        take({x1, disk.center.x2 - h});
        if (up > best_top) {
            best_top = up;
            top_x = x1;
        }
        if (down < best_bottom) {
            best_bottom = down;
            bottom_x = x1;
        }
    }
    for (int i = 0; i < fine; ++i) {
        const double u = -1.0 + 2.0 * i / (fine - 1);
        const double xt = std::clamp(top_x + u * step, lo, hi);
        const double xb = std::clamp(bottom_x + u * step, lo, hi);
        take({xt, disk.center.x2 + half_at(xt)});
        take({xb, disk.center.x2 - half_at(xb)});
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 2 * columns + 2 * fine; i < samples; ++i) {
        const double x1 = lo + (hi - lo) * unit(rng);
        take({x1, disk.center.x2 + half_at(x1) * (2.0 * unit(rng) - 1.0)});
    }
    res.lo_gap = vmin - res.image.lo;
    res.hi_gap = res.image.hi - vmax;
    res.overshoot = std::max({0.0, -res.lo_gap, -res.hi_gap});
    return res;
}

DiffSweepResult diff_interval_sweep(const CurveProfile& curve, Interval subrange, int points) {
    if (points < 4) {
        throw PreconditionError("sweep needs at least 4 points");
    }
    const double smin = curve.a() - subrange.hi;
    const double smax = curve.b() - subrange.lo;
    const std::vector<double> special{smin, 0.0, smax};
    std::vector<double> shifts;
    const int n = points - 1;
    for (int i = 0; i < n; ++i) {
        shifts.push_back(i == n - 1 ? smax : smin + (smax - smin) * i / (n - 1));
    }
    shifts.push_back(0.0);
    DiffSweepResult res;
    res.worst_width_excess = -std::numeric_limits<double>::infinity();
    res.min_regular_width = std::numeric_limits<double>::infinity();
    for (double s : shifts) {
        const double w = diff_interval(curve, subrange, s).length();
        res.worst_width_excess = std::max(res.worst_width_excess, w - curve.df_bound() * std::fabs(s));
        const bool is_special =
            std::any_of(special.begin(), special.end(), [&](double p) { return s == p; });
        if (is_special) {
            res.special_width = std::max(res.special_width, w);
        } else {
            res.min_regular_width = std::min(res.min_regular_width, w);
        }
    }
    return res;
}

}  // namespace vblind
