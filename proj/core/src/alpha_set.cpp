#include "vblind/alpha_set.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "vblind/errors.hpp"

namespace vblind {

AlphaSet::AlphaSet(std::vector<Interval> components, double grid_step)
    : components_(std::move(components)), step_(grid_step) {
    if (components_.empty()) {
        throw PreconditionError("alpha set needs at least one component");
    }
    if (!(std::isfinite(step_) && step_ > 0.0)) {
        throw PreconditionError("alpha grid step must be positive");
    }
    for (const Interval& c : components_) {
        make_interval(c.lo, c.hi);
    }
    std::sort(components_.begin(), components_.end(),
              [](Interval p, Interval q) { return p.lo < q.lo; });
    for (std::size_t i = 1; i < components_.size(); ++i) {
        if (components_[i].lo <= components_[i - 1].hi) {
            throw PreconditionError("alpha set components overlap");
        }
    }
}

AlphaSet AlphaSet::with_points(std::vector<Interval> components, int points) {
    if (points < 2) {
        throw PreconditionError("alpha grid needs at least 2 points");
    }
    double longest = 0.0;
    for (const Interval& c : components) {
        longest = std::max(longest, c.length());
    }
    const double step = longest > 0.0 ? longest / (points - 1) : 1.0;
    return AlphaSet(std::move(components), step);
}

std::vector<double> AlphaSet::grid() const {
    std::vector<double> out;
    for (const Interval& c : components_) {
        if (c.length() == 0.0) {
            out.push_back(c.lo);
            continue;
        }
        const auto k = static_cast<long>(std::ceil(c.length() / step_ - 1e-9));
        const long n = std::max(k, 1L);
        for (long i = 0; i <= n; ++i) {
            out.push_back(i == n ? c.hi : c.lo + c.length() * static_cast<double>(i) / n);
        }
    }
    return out;
}

bool AlphaSet::contains(double alpha) const noexcept {
    return std::any_of(components_.begin(), components_.end(),
                       [alpha](Interval c) { return c.contains(alpha); });
}

Interval AlphaSet::hull() const noexcept { return {components_.front().lo, components_.back().hi}; }

bool AlphaSet::disjoint_from(const AlphaSet& other) const noexcept {
    for (const Interval& p : components_) {
        for (const Interval& q : other.components_) {
            if (p.lo <= q.hi && q.lo <= p.hi) {
                return false;
            }
        }
    }
    return true;
}

std::optional<AlphaSet> AlphaSet::intersect(Interval box) const {
    std::vector<Interval> kept;
    for (const Interval& c : components_) {
        const double lo = std::max(c.lo, box.lo);
        const double hi = std::min(c.hi, box.hi);
        if (lo <= hi) {
            kept.push_back({lo, hi});
        }
    }
    if (kept.empty()) {
        return std::nullopt;
    }
    return AlphaSet(std::move(kept), step_);
}

}  // namespace vblind
