#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vblind/curve.hpp"
#include "vblind/geometry.hpp"

namespace vblind {

// Gaps narrower than this are closed when canonicalizing.
inline constexpr double kMergeTol = 1e-12;

// Sorted, pairwise disjoint closed intervals on a vertical line.
class IntervalUnion {
public:
    IntervalUnion() = default;

    static IntervalUnion union_of(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }
    double measure() const noexcept;

    // Every point of target lies within `margin` of this set.
    bool contains(const IntervalUnion& target, double margin = 0.0) const;
    // Lebesgue measure of target minus this set.
    double uncovered_measure(const IntervalUnion& target) const;
    // Some point of target farther than `margin` from this set, if any.
    std::optional<double> uncovered_point(const IntervalUnion& target, double margin = 0.0) const;

    IntervalUnion expanded(double r) const;
    // Each member shrunk by r at both ends; members that vanish are dropped.
    IntervalUnion shrunk(double r) const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    std::vector<Interval> parts_;
};

IntervalUnion union_of(std::vector<Interval> intervals);

double hausdorff(const IntervalUnion& u, const IntervalUnion& v);

// Exact image of seg (clipped to the strip) under the projection at alpha.
IntervalUnion project_segment(const CurveProfile& curve, double alpha, const Segment& seg);
Interval project_segment_interval(const CurveProfile& curve, double alpha, const Segment& seg,
                                  bool& hit);

IntervalUnion project_blinds(const CurveProfile& curve, double alpha,
                             std::span<const Segment> segments);

}  // namespace vblind
