#include "vblind/geometry.hpp"

#include <algorithm>

#include "vblind/errors.hpp"

namespace vblind {

Interval make_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
        throw PreconditionError("interval needs finite lo <= hi");
    }
    return {lo, hi};
}

Segment::Segment(Point a, Point b) : a_(a), b_(b) {
    if (!std::isfinite(a.x1) || !std::isfinite(a.x2) || !std::isfinite(b.x1) ||
        !std::isfinite(b.x2)) {
        throw PreconditionError("segment endpoints must be finite");
    }
    if (a == b) {
        throw PreconditionError("segment endpoints coincide");
    }
}

double point_segment_distance(Point p, const Segment& s) noexcept {
    const Point d = s.b() - s.a();
    const double len2 = d.x1 * d.x1 + d.x2 * d.x2;
    const Point w = p - s.a();
    const double t = std::clamp((w.x1 * d.x1 + w.x2 * d.x2) / len2, 0.0, 1.0);
    return distance(p, s.point_at(t));
}

double max_distance(const Segment& s, const Segment& to) noexcept {
    return std::max(point_segment_distance(s.a(), to), point_segment_distance(s.b(), to));
}

}  // namespace vblind
