#include "vblind/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "internal.hpp"
#include "vblind/errors.hpp"

namespace vblind {

namespace {

constexpr int kMonotoneGrid = 257;
constexpr double kBisectTol = 1e-12;
constexpr int kBisectIters = 200;

Interval pick_domain(std::optional<Interval> override, Interval fallback) {
    return override.value_or(fallback);
}

}  // namespace

CurveProfile::CurveProfile(std::string name, Fn f, Fn df, std::optional<Fn> df_inverse, double a,
                           double b)
    : name_(std::move(name)),
      f_(std::move(f)),
      df_(std::move(df)),
      df_inverse_(std::move(df_inverse)),
      a_(a),
      b_(b) {
    if (!f_ || !df_) {
        throw PreconditionError("curve '" + name_ + "' needs f and f'");
    }
    if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
        throw PreconditionError("curve '" + name_ + "' needs finite a < b");
    }
    std::vector<double> slopes(kMonotoneGrid);
    for (int i = 0; i < kMonotoneGrid; ++i) {
        const double t = i == kMonotoneGrid - 1 ? b : a + (b - a) * i / (kMonotoneGrid - 1);
        slopes[i] = df_(t);
        if (!std::isfinite(slopes[i]) || !std::isfinite(f_(t))) {
            throw NumericError("curve '" + name_ + "' is not finite on [a, b]");
        }
    }
    monotone_ = slopes.back() > slopes.front() ? Monotone::increasing : Monotone::decreasing;
    for (int i = 1; i < kMonotoneGrid; ++i) {
        const bool ordered = monotone_ == Monotone::increasing ? slopes[i] > slopes[i - 1]
                                                               : slopes[i] < slopes[i - 1];
        if (!ordered) {
            throw PreconditionError("curve '" + name_ + "': f' is not strictly monotone");
        }
    }
    df_bound_ = std::max(std::fabs(slopes.front()), std::fabs(slopes.back()));
    if (df_inverse_) {
        if (!*df_inverse_) {
            throw PreconditionError("curve '" + name_ + "': empty inverse of f'");
        }
        for (int i = 0; i < kMonotoneGrid; ++i) {
            const double t = i == kMonotoneGrid - 1 ? b : a + (b - a) * i / (kMonotoneGrid - 1);
            if (std::fabs((*df_inverse_)(slopes[i]) - t) > 1e-10) {
                throw PreconditionError("curve '" + name_ + "': inverse of f' does not round-trip");
            }
        }
    }
    constexpr int lip_grid = 4097;
    const double h = (b - a) / (lip_grid - 1);
    double lip = 0.0;
    double prev = std::atan(slopes.front());
    for (int i = 1; i < lip_grid; ++i) {
        const double t = i == lip_grid - 1 ? b : a + h * i;
        const double cur = std::atan(df_(t));
        lip = std::max(lip, std::fabs(cur - prev) / h);
        prev = cur;
    }
    theta_lip_ = 1.25 * lip;
}

CurveProfile CurveProfile::parabola(std::optional<Interval> domain) {
    const Interval d = pick_domain(domain, {0.0, 1.0});
    return CurveProfile(
        "parabola", [](double t) { return t * t; }, [](double t) { return 2.0 * t; },
        Fn([](double s) { return s / 2.0; }), d.lo, d.hi);
}

CurveProfile CurveProfile::quarter_circle(std::optional<Interval> domain) {
    const Interval d = pick_domain(domain, {-0.7, 0.7});
    if (d.lo <= -1.0 || d.hi >= 1.0) {
        throw PreconditionError("quarter_circle domain must lie inside (-1, 1)");
    }
    return CurveProfile(
        "quarter_circle", [](double t) { return std::sqrt(1.0 - t * t); },
        [](double t) { return -t / std::sqrt(1.0 - t * t); },
        Fn([](double s) { return -s / std::sqrt(1.0 + s * s); }), d.lo, d.hi);
}

CurveProfile CurveProfile::exponential(std::optional<Interval> domain) {
    const Interval d = pick_domain(domain, {0.0, 1.0});
    return CurveProfile(
        "exp", [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); },
        Fn([](double s) { return std::log(s); }), d.lo, d.hi);
}

CurveProfile CurveProfile::builtin(const std::string& name, std::optional<Interval> domain) {
    if (name == "parabola") {
        return parabola(domain);
    }
    if (name == "quarter_circle") {
        return quarter_circle(domain);
    }
    if (name == "exp") {
        return exponential(domain);
    }
    throw PreconditionError("unknown curve '" + name + "'");
}

double CurveProfile::f(double t) const { return f_(std::clamp(t, a_, b_)); }

double CurveProfile::df(double t) const { return df_(std::clamp(t, a_, b_)); }

double CurveProfile::slope_angle(double t) const { return std::atan(df(t)); }

std::optional<double> CurveProfile::solve_df(double slope) const {
    const double lo_slope = monotone_ == Monotone::increasing ? df_(a_) : df_(b_);
    const double hi_slope = monotone_ == Monotone::increasing ? df_(b_) : df_(a_);
    if (!(slope >= lo_slope && slope <= hi_slope)) {
        return std::nullopt;
    }
    if (df_inverse_) {
        return std::clamp((*df_inverse_)(slope), a_, b_);
    }
    double lo = a_;
    double hi = b_;
    const bool inc = monotone_ == Monotone::increasing;
    for (int i = 0; i < kBisectIters && hi - lo > kBisectTol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool below = df_(mid) < slope;
        if (below == inc) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Disk::Disk(Point c, double r) : center(c), radius(r) {
    if (!(std::isfinite(r) && r > 0.0) || !std::isfinite(c.x1) || !std::isfinite(c.x2)) {
        throw PreconditionError("disk needs a finite center and positive radius");
    }
}

Interval domain_strip(const CurveProfile& curve, double alpha) noexcept {
    return {alpha - curve.b(), alpha - curve.a()};
}

bool in_domain(const CurveProfile& curve, double alpha, double x1, double tol) noexcept {
    const Interval s = domain_strip(curve, alpha);
    return x1 >= s.lo - tol && x1 <= s.hi + tol;
}

namespace {

double checked_t(const CurveProfile& curve, double alpha, Point x) {
    if (!std::isfinite(alpha) || !std::isfinite(x.x1) || !std::isfinite(x.x2)) {
        throw NumericError("non-finite projection input");
    }
    if (!in_domain(curve, alpha, x.x1)) {
        throw DomainError("x1 outside the strip at this alpha");
    }
    return std::clamp(alpha - x.x1, curve.a(), curve.b());
}

}  // namespace

double eval_phi(const CurveProfile& curve, double alpha, Point x) {
    const double v = x.x2 + curve.f(checked_t(curve, alpha, x));
    if (!std::isfinite(v)) {
        throw NumericError("projection value is not finite");
    }
    return v;
}

Direction tangent_direction(const CurveProfile& curve, double alpha, Point x) {
    return normalize(curve.slope_angle(checked_t(curve, alpha, x)));
}

Point grad_phi(const CurveProfile& curve, double alpha, Point x) {
    return {-curve.df(checked_t(curve, alpha, x)), 1.0};
}

Point fiber_point(const CurveProfile& curve, Point y, double t) {
    if (!(t >= curve.a() && t <= curve.b())) {
        throw DomainError("fiber parameter outside [a, b]");
    }
    return {y.x1 - t, y.x2 - curve.f(t)};
}

Interval diff_interval(const CurveProfile& curve, Interval subrange, double s) {
    if (subrange.lo < curve.a() || subrange.hi > curve.b() || subrange.lo > subrange.hi) {
        throw PreconditionError("subrange must lie inside [a, b]");
    }
    const double smin = curve.a() - subrange.hi;
    const double smax = curve.b() - subrange.lo;
    if (!(s >= smin && s <= smax)) {
        throw DomainError("shift outside [a - b', b - a']");
    }
    const double t0 = std::max(curve.a() - s, subrange.lo);
    const double t1 = std::min(curve.b() - s, subrange.hi);
    const auto g = [&](double t) { return curve.f(t + s) - curve.f(t); };
    const double v0 = g(t0);
    const double v1 = g(std::max(t0, t1));
    return {std::min(v0, v1), std::max(v0, v1)};
}

Interval project_disk(const CurveProfile& curve, double alpha, const Disk& disk) {
    const Interval strip = domain_strip(curve, alpha);
    const double lo = std::max(disk.center.x1 - disk.radius, strip.lo);
    const double hi = std::min(disk.center.x1 + disk.radius, strip.hi);
    if (lo > hi) {
        throw DomainError("disk misses the strip");
    }
    const double c1 = disk.center.x1;
    const double c2 = disk.center.x2;
    const double r = disk.radius;
    const auto half_chord = [=](double x1) {
        const double d = x1 - c1;
        return std::sqrt(std::max(0.0, r * r - d * d));
    };
    const auto upper = [&](double x1) { return c2 + half_chord(x1) + curve.f(alpha - x1); };
    const auto neg_lower = [&](double x1) { return -(c2 - half_chord(x1) + curve.f(alpha - x1)); };
    return {-detail::seeded_max(neg_lower, lo, hi), detail::seeded_max(upper, lo, hi)};
}

std::optional<DirectionSpan> direction_span(const CurveProfile& curve, Interval alphas,
                                            Interval x1s) {
    const double tlo = alphas.lo - x1s.hi;
    const double thi = alphas.hi - x1s.lo;
    if (tlo < curve.a() - kDomainTol || thi > curve.b() + kDomainTol) {
        return std::nullopt;
    }
    const double u = curve.slope_angle(tlo);
    const double v = curve.slope_angle(thi);
    return DirectionSpan{std::min(u, v), std::fabs(v - u)};
}

bool span_within(const DirectionSpan& span, const Arc& arc, double tol) {
    const Arc c = arc.ccw();
    const Direction s = normalize(span.start);
    if (!arc_contains(c, s, tol)) {
        return false;
    }
    double offset = sweep(c.start(), s, Chirality::counterclockwise);
    if (kPi - offset <= tol) {
        offset -= kPi;
    }
    return offset + span.width <= c.length() + tol;
}

}  // namespace vblind
