#pragma once

#include <optional>
#include <vector>

#include "vblind/geometry.hpp"

namespace vblind {

// A finite union of disjoint closed intervals of alpha values, together with
// the spacing of the grid used to certify statements over it.
class AlphaSet {
public:
    AlphaSet(std::vector<Interval> components, double grid_step);

    // Grid step chosen so the longest component gets exactly `points` grid points.
    static AlphaSet with_points(std::vector<Interval> components, int points);

    const std::vector<Interval>& components() const noexcept { return components_; }
    double grid_step() const noexcept { return step_; }

    // Per component: both endpoints and equally spaced points between them,
    // spacing at most grid_step.
    std::vector<double> grid() const;

    bool contains(double alpha) const noexcept;
    bool is_interval() const noexcept { return components_.size() == 1; }
    Interval hull() const noexcept;
    bool disjoint_from(const AlphaSet& other) const noexcept;
    std::optional<AlphaSet> intersect(Interval box) const;
    AlphaSet refined() const { return AlphaSet(components_, step_ / 2.0); }

private:
    std::vector<Interval> components_;
    double step_;
};

}  // namespace vblind
