#pragma once

#include <functional>
#include <optional>
#include <string>

#include "vblind/geometry.hpp"
#include "vblind/projline.hpp"

namespace vblind {

enum class Monotone { increasing, decreasing };

// The curve graph(f) over [a, b] with f' strictly monotone.
// Immutable after construction.
class CurveProfile {
public:
    using Fn = std::function<double(double)>;

    CurveProfile(std::string name, Fn f, Fn df, std::optional<Fn> df_inverse, double a, double b);

    // t^2 on [0, 1]
    static CurveProfile parabola(std::optional<Interval> domain = std::nullopt);
    // sqrt(1 - t^2) on [-0.7, 0.7]
    static CurveProfile quarter_circle(std::optional<Interval> domain = std::nullopt);
    // e^t on [0, 1]
    static CurveProfile exponential(std::optional<Interval> domain = std::nullopt);
    // "parabola", "quarter_circle" or "exp"
    static CurveProfile builtin(const std::string& name,
                                std::optional<Interval> domain = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    Interval domain() const noexcept { return {a_, b_}; }
    Monotone monotone() const noexcept { return monotone_; }
    bool has_df_inverse() const noexcept { return df_inverse_.has_value(); }

    // Evaluators clamp t into [a, b]; callers check the domain first.
    double f(double t) const;
    double df(double t) const;
    double slope_angle(double t) const;  // atan f'(t), in (-pi/2, pi/2)

    // sup |f'| on [a, b]; f' is monotone so this is attained at an endpoint.
    double df_bound() const noexcept { return df_bound_; }
    // Numerical bound on |d/dt atan f'(t)| over [a, b], with 25% headroom.
    double theta_lipschitz() const noexcept { return theta_lip_; }

    // The t in [a, b] with f'(t) = slope, or nothing when slope is outside f'([a, b]).
    std::optional<double> solve_df(double slope) const;

private:
    std::string name_;
    Fn f_;
    Fn df_;
    std::optional<Fn> df_inverse_;
    double a_;
    double b_;
    Monotone monotone_ = Monotone::increasing;
    double df_bound_ = 0.0;
    double theta_lip_ = 0.0;
};

inline constexpr double kDomainTol = 1e-12;

struct Disk {
    Point center;
    double radius = 0.0;

    Disk(Point c, double r);
};

// x1-range [alpha - b, alpha - a] on which the projection at alpha is defined.
Interval domain_strip(const CurveProfile& curve, double alpha) noexcept;
bool in_domain(const CurveProfile& curve, double alpha, double x1,
               double tol = kDomainTol) noexcept;

// x2 + f(alpha - x1). Throws DomainError outside the strip.
double eval_phi(const CurveProfile& curve, double alpha, Point x);
// Direction of (1, f'(alpha - x1)), the fiber's tangent at x.
Direction tangent_direction(const CurveProfile& curve, double alpha, Point x);
// (-f'(alpha - x1), 1), returned as a plane vector.
Point grad_phi(const CurveProfile& curve, double alpha, Point x);

// The point (alpha0 - t, y2 - f(t)) of the fiber through y = (alpha0, y2).
Point fiber_point(const CurveProfile& curve, Point y, double t);

// {f(t + s) - f(t) : t in [max(a - s, a'), min(b - s, b')]}, for s in [a - b', b - a'].
Interval diff_interval(const CurveProfile& curve, Interval subrange, double s);

// Image of the closed disk, clipped to the strip, under the projection at alpha.
Interval project_disk(const CurveProfile& curve, double alpha, const Disk& disk);

// Tangent directions over a box of (alpha, x1) pairs: an arc starting at the
// raw angle `start` (radians, not reduced) and running `width` counterclockwise.
struct DirectionSpan {
    double start = 0.0;
    double width = 0.0;
};

// Exact direction set {theta_alpha(x) : alpha in alphas, x1 in x1s}, or nothing
// when some pair leaves the strip (alpha - x1 outside [a, b]).
std::optional<DirectionSpan> direction_span(const CurveProfile& curve, Interval alphas,
                                            Interval x1s);

// Whether the span lies inside the closed arc.
bool span_within(const DirectionSpan& span, const Arc& arc, double tol = 0.0);

}  // namespace vblind
