#include "vblind/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vblind/errors.hpp"

namespace vblind {

namespace {

std::vector<Interval> merged(std::vector<Interval> v, double tol) {
    std::sort(v.begin(), v.end(), [](Interval p, Interval q) { return p.lo < q.lo; });
    std::vector<Interval> out;
    for (const Interval& c : v) {
        if (!out.empty() && c.lo <= out.back().hi + tol) {
            out.back().hi = std::max(out.back().hi, c.hi);
        } else {
            out.push_back(c);
        }
    }
    return out;
}

double distance_to(const std::vector<Interval>& parts, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (const Interval& c : parts) {
        if (c.contains(x)) {
            return 0.0;
        }
        best = std::min(best, x < c.lo ? c.lo - x : x - c.hi);
    }
    return best;
}

}  // namespace

IntervalUnion IntervalUnion::union_of(std::vector<Interval> intervals) {
    for (const Interval& c : intervals) {
        if (!(c.lo <= c.hi)) {
            throw PreconditionError("inverted or non-finite interval in union");
        }
    }
    IntervalUnion u;
    u.parts_ = merged(std::move(intervals), kMergeTol);
    return u;
}

IntervalUnion union_of(std::vector<Interval> intervals) {
    return IntervalUnion::union_of(std::move(intervals));
}

double IntervalUnion::measure() const noexcept {
    double m = 0.0;
    for (const Interval& c : parts_) {
        m += c.length();
    }
    return m;
}

std::optional<double> IntervalUnion::uncovered_point(const IntervalUnion& target,
                                                     double margin) const {
    if (margin < 0.0) {
        throw PreconditionError("containment margin must be non-negative");
    }
    const std::vector<Interval> cover = expanded(margin).parts_;
    for (const Interval& t : target.parts_) {
        const auto it = std::find_if(cover.begin(), cover.end(),
                                     [&](Interval c) { return c.lo <= t.lo && t.hi <= c.hi; });
        if (it != cover.end()) {
            continue;
        }
        // first point of t outside the cover
        double x = t.lo;
        for (const Interval& c : cover) {
            if (c.contains(x)) {
                x = c.hi;
            }
        }
        if (!cover.empty() && distance_to(cover, x) == 0.0) {
            x = std::nextafter(x, std::numeric_limits<double>::infinity());
        }
        return std::min(x, t.hi);
    }
    return std::nullopt;
}

bool IntervalUnion::contains(const IntervalUnion& target, double margin) const {
    return !uncovered_point(target, margin).has_value();
}

double IntervalUnion::uncovered_measure(const IntervalUnion& target) const {
    double missing = 0.0;
    for (const Interval& t : target.parts_) {
        double covered = 0.0;
        for (const Interval& c : parts_) {
            const double lo = std::max(c.lo, t.lo);
            const double hi = std::min(c.hi, t.hi);
            if (lo < hi) {
                covered += hi - lo;
            }
        }
        missing += std::max(0.0, t.length() - covered);
    }
    return missing;
}

IntervalUnion IntervalUnion::expanded(double r) const {
    std::vector<Interval> v;
    v.reserve(parts_.size());
    for (const Interval& c : parts_) {
        v.push_back({c.lo - r, c.hi + r});
    }
    IntervalUnion u;
    u.parts_ = merged(std::move(v), kMergeTol);
    return u;
}

IntervalUnion IntervalUnion::shrunk(double r) const {
    std::vector<Interval> v;
    for (const Interval& c : parts_) {
        if (c.lo + r <= c.hi - r) {
            v.push_back({c.lo + r, c.hi - r});
        }
    }
    IntervalUnion u;
    u.parts_ = std::move(v);
    return u;
}

double hausdorff(const IntervalUnion& u, const IntervalUnion& v) {
    if (u.empty() && v.empty()) {
        return 0.0;
    }
    if (u.empty() || v.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    // For unions of intervals the directed distance is attained at an endpoint
    // or at the middle of a gap of the other set.
    const auto directed = [](const IntervalUnion& p, const IntervalUnion& q) {
        std::vector<double> probes;
        for (const Interval& c : p.intervals()) {
            probes.push_back(c.lo);
            probes.push_back(c.hi);
        }
        const auto& qs = q.intervals();
        for (std::size_t i = 1; i < qs.size(); ++i) {
            const double mid = 0.5 * (qs[i - 1].hi + qs[i].lo);
            for (const Interval& c : p.intervals()) {
                if (c.contains(mid)) {
                    probes.push_back(mid);
                }
            }
        }
        double worst = 0.0;
        for (double x : probes) {
            worst = std::max(worst, distance_to(qs, x));
        }
        return worst;
    };
    return std::max(directed(u, v), directed(v, u));
}

Interval project_segment_interval(const CurveProfile& curve, double alpha, const Segment& seg,
                                  bool& hit) {
    const Interval strip = domain_strip(curve, alpha);
    const double lo_x = strip.lo - kDomainTol;
    const double hi_x = strip.hi + kDomainTol;
    const Point a = seg.a();
    const Point d = seg.b() - seg.a();
    const auto value = [&](double t) {
        const Point x = seg.point_at(t);
        return x.x2 + curve.f(alpha - x.x1);
    };
    hit = false;
    if (d.x1 == 0.0) {
        if (a.x1 < lo_x || a.x1 > hi_x) {
            return {};
        }
        hit = true;
        const double v0 = value(0.0);
        const double v1 = value(1.0);
        return {std::min(v0, v1), std::max(v0, v1)};
    }
    double t0 = (lo_x - a.x1) / d.x1;
    double t1 = (hi_x - a.x1) / d.x1;
    if (t0 > t1) {
        std::swap(t0, t1);
    }
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    if (t0 > t1) {
        return {};
    }
    hit = true;
    double lo = std::min(value(t0), value(t1));
    double hi = std::max(value(t0), value(t1));
    // t -> value(t) has monotone derivative; an interior extremum sits where
    // f'(alpha - x1) equals the segment slope.
    if (const auto u = curve.solve_df(d.x2 / d.x1)) {
        const double tc = (alpha - *u - a.x1) / d.x1;
        if (tc > t0 && tc < t1) {
            const double vc = value(tc);
            lo = std::min(lo, vc);
            hi = std::max(hi, vc);
        }
    }
    return {lo, hi};
}

IntervalUnion project_segment(const CurveProfile& curve, double alpha, const Segment& seg) {
    bool hit = false;
    const Interval iv = project_segment_interval(curve, alpha, seg, hit);
    if (!hit) {
        return {};
    }
    return IntervalUnion::union_of({iv});
}

IntervalUnion project_blinds(const CurveProfile& curve, double alpha,
                             std::span<const Segment> segments) {
    std::vector<Interval> parts;
    parts.reserve(segments.size());
    for (const Segment& s : segments) {
        bool hit = false;
        const Interval iv = project_segment_interval(curve, alpha, s, hit);
        if (hit) {
            parts.push_back(iv);
        }
    }
    return IntervalUnion::union_of(std::move(parts));
}

}  // namespace vblind
