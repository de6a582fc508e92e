#pragma once

#include <cmath>

#include "vblind/projline.hpp"

namespace vblind {

struct Point {
    double x1 = 0.0;
    double x2 = 0.0;

    friend constexpr Point operator+(Point p, Point q) noexcept { return {p.x1 + q.x1, p.x2 + q.x2}; }
    friend constexpr Point operator-(Point p, Point q) noexcept { return {p.x1 - q.x1, p.x2 - q.x2}; }
    friend constexpr Point operator*(double s, Point p) noexcept { return {s * p.x1, s * p.x2}; }
    friend constexpr bool operator==(Point, Point) = default;
};

inline double norm(Point v) noexcept { return std::hypot(v.x1, v.x2); }
inline double distance(Point p, Point q) noexcept { return norm(p - q); }

// Closed real interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    constexpr double length() const noexcept { return hi - lo; }
    constexpr bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    friend constexpr bool operator==(Interval, Interval) = default;
};

Interval make_interval(double lo, double hi);

// Oriented line segment {(1-t)a + tb : t in [0,1]} with a != b.
class Segment {
public:
    Segment(Point a, Point b);

    Point a() const noexcept { return a_; }
    Point b() const noexcept { return b_; }
    double length() const noexcept { return distance(a_, b_); }
    Direction direction() const { return Direction::of_vector(b_.x1 - a_.x1, b_.x2 - a_.x2); }
    Point point_at(double t) const noexcept { return (1.0 - t) * a_ + t * b_; }

    friend bool operator==(const Segment&, const Segment&) = default;

private:
    Point a_;
    Point b_;
};

double point_segment_distance(Point p, const Segment& s) noexcept;

// Largest distance from a point of `s` to the segment `to`. The distance to a
// convex set is convex along s, so the maximum sits at an endpoint.
double max_distance(const Segment& s, const Segment& to) noexcept;

}  // namespace vblind
