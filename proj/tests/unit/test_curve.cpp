#include <vblind/curve.hpp>
#include <vblind/errors.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace vblind;

namespace {

constexpr double kTol = 1e-12;

// Dense boundary sampling of the disk clipped to the strip.
Interval sampled_disk_image(const CurveProfile& curve, double alpha, const Disk& disk) {
    const Interval strip = domain_strip(curve, alpha);
    double lo = INFINITY, hi = -INFINITY;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double t = 2 * kPi * i / n;
        const Point p{disk.center.x1 + disk.radius * std::cos(t),
                      disk.center.x2 + disk.radius * std::sin(t)};
        if (p.x1 < strip.lo || p.x1 > strip.hi) continue;
        const double v = eval_phi(curve, alpha, p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    // Corners where the circle crosses the strip boundary.
    for (double x1 : {strip.lo, strip.hi}) {
        const double d = x1 - disk.center.x1;
        if (std::abs(d) > disk.radius) continue;
        const double h = std::sqrt(disk.radius * disk.radius - d * d);
        for (double x2 : {disk.center.x2 - h, disk.center.x2 + h}) {
            const double v = eval_phi(curve, alpha, {x1, x2});
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return {lo, hi};
}

}  // namespace

TEST(Curve, BuiltinsHaveExpectedShape) {
    const auto p = CurveProfile::parabola();
    EXPECT_EQ(p.a(), 0.0);
    EXPECT_EQ(p.b(), 1.0);
    EXPECT_EQ(p.monotone(), Monotone::increasing);
    EXPECT_NEAR(p.df_bound(), 2.0, kTol);

    const auto q = CurveProfile::quarter_circle();
    EXPECT_EQ(q.a(), -0.7);
    EXPECT_EQ(q.monotone(), Monotone::decreasing);
    EXPECT_NEAR(q.df_bound(), 0.7 / std::sqrt(1 - 0.49), kTol);

    const auto e = CurveProfile::builtin("exp");
    EXPECT_NEAR(e.df_bound(), std::exp(1.0), kTol);
    EXPECT_THROW(CurveProfile::builtin("cubic"), PreconditionError);
    EXPECT_THROW(CurveProfile::quarter_circle(Interval{-1.0, 0.5}), PreconditionError);
}

TEST(Curve, RejectsNonMonotoneDerivative) {
    EXPECT_THROW(CurveProfile("cubic", [](double t) { return t * t * t; },
                              [](double t) { return 3 * t * t; }, std::nullopt, -1, 1),
                 PreconditionError);
    EXPECT_THROW(CurveProfile("flat", [](double t) { return t * t; },
                              [](double t) { return 2 * t; }, std::nullopt, 1, 1),
                 PreconditionError);
}

TEST(Curve, SolveDfInvertsDerivative) {
    for (const char* name : {"parabola", "quarter_circle", "exp"}) {
        const auto c = CurveProfile::builtin(name);
        for (double t = c.a(); t <= c.b(); t += (c.b() - c.a()) / 17) {
            const auto s = c.solve_df(c.df(t));
            ASSERT_TRUE(s.has_value()) << name;
            EXPECT_NEAR(*s, t, 1e-9) << name;
        }
        EXPECT_FALSE(c.solve_df(100.0).has_value()) << name;
    }
}

TEST(EvalPhi, Examples) {
    const auto p = CurveProfile::parabola();
    EXPECT_NEAR(eval_phi(p, 1.0, {0.5, 0.25}), 0.5, kTol);
    const auto q = CurveProfile::quarter_circle();
    EXPECT_NEAR(eval_phi(q, 0.0, {0.0, 0.0}), 1.0, kTol);
    for (const char* name : {"parabola", "quarter_circle", "exp"}) {
        const auto c = CurveProfile::builtin(name);
        const double alpha = 0.37;
        EXPECT_NEAR(eval_phi(c, alpha, {alpha - c.a(), 0.0}), c.f(c.a()), kTol) << name;
    }
}

TEST(EvalPhi, OutsideStripThrows) {
    const auto p = CurveProfile::parabola();
    EXPECT_THROW(eval_phi(p, 1.0, {1.5, 0.0}), DomainError);
    EXPECT_THROW(eval_phi(p, 1.0, {-0.5, 0.0}), DomainError);
}

TEST(TangentDirection, Examples) {
    const auto p = CurveProfile::parabola();
    EXPECT_NEAR(tangent_direction(p, 1.0, {0.5, 0.0}).radians(), kPi / 4, kTol);
    EXPECT_NEAR(tangent_direction(p, 1.0, {1.0, 0.0}).radians(), 0.0, kTol);
    const auto q = CurveProfile::quarter_circle();
    EXPECT_NEAR(tangent_direction(q, 0.3, {0.3, 7.0}).radians(), 0.0, kTol);
}

TEST(GradPhi, Examples) {
    const auto p = CurveProfile::parabola();
    const Point g = grad_phi(p, 1.0, {0.5, 0.0});
    EXPECT_NEAR(g.x1, -1.0, kTol);
    EXPECT_EQ(g.x2, 1.0);
    const Point flat = grad_phi(p, 1.0, {1.0, 3.0});
    EXPECT_NEAR(flat.x1, 0.0, kTol);
    EXPECT_EQ(flat.x2, 1.0);
}

TEST(GradPhi, IsOrthogonalToTangentDirection) {
    const auto e = CurveProfile::exponential();
    for (double x1 = -0.9; x1 <= 0.1; x1 += 0.1) {
        const Point g = grad_phi(e, 0.1, {x1, 0.0});
        const double t = tangent_direction(e, 0.1, {x1, 0.0}).radians();
        EXPECT_NEAR(g.x1 * std::cos(t) + g.x2 * std::sin(t), 0.0, 1e-12);
    }
}

TEST(DomainStrip, Examples) {
    const Interval p = domain_strip(CurveProfile::parabola(), 1.0);
    EXPECT_EQ(p.lo, 0.0);
    EXPECT_EQ(p.hi, 1.0);
    const Interval q = domain_strip(CurveProfile::quarter_circle(), 0.0);
    EXPECT_NEAR(q.lo, -0.7, kTol);
    EXPECT_NEAR(q.hi, 0.7, kTol);
}

TEST(FiberPoint, Examples) {
    const auto p = CurveProfile::parabola();
    const Point f = fiber_point(p, {1, 0}, 0.5);
    EXPECT_NEAR(f.x1, 0.5, kTol);
    EXPECT_NEAR(f.x2, -0.25, kTol);
    const Point e = fiber_point(p, {1, 0}, p.a());
    EXPECT_NEAR(e.x1, 1.0 - p.a(), kTol);
    EXPECT_NEAR(e.x2, -p.f(p.a()), kTol);
    EXPECT_THROW(fiber_point(p, {1, 0}, 1.5), DomainError);
}

TEST(FiberPoint, ProjectsToSameValueAtBaseAlpha) {
    const auto q = CurveProfile::quarter_circle();
    const Point y{0.2, 0.3};
    for (double t = -0.7; t <= 0.7; t += 0.1) {
        EXPECT_NEAR(eval_phi(q, y.x1, fiber_point(q, y, t)), y.x2, kTol);
    }
}

TEST(DiffInterval, Examples) {
    const auto p = CurveProfile::parabola();
    const Interval i = diff_interval(p, {0, 1}, 0.5);
    EXPECT_NEAR(i.lo, 0.25, kTol);
    EXPECT_NEAR(i.hi, 0.75, kTol);
    const Interval z = diff_interval(p, {0, 1}, 0.0);
    EXPECT_NEAR(z.length(), 0.0, kTol);
    EXPECT_THROW(diff_interval(p, {0, 1}, 1.5), DomainError);
    EXPECT_THROW(diff_interval(p, {0.5, 1.5}, 0.1), PreconditionError);
}

TEST(DiffInterval, MatchesDenseSampling) {
    const auto e = CurveProfile::exponential();
    const Interval sub{0.2, 0.7};
    for (int k = 0; k <= 30; ++k) {
        const double s = -0.7 + 1.5 * k / 30;
        const Interval got = diff_interval(e, sub, s);
        double lo = INFINITY, hi = -INFINITY;
        for (int i = 0; i <= 20000; ++i) {
            const double t = sub.lo + (sub.hi - sub.lo) * i / 20000.0;
            const double u = t + s;
            if (u < e.a() || u > e.b()) continue;
            const double v = e.f(u) - e.f(t);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        EXPECT_NEAR(got.lo, lo, 1e-6) << s;
        EXPECT_NEAR(got.hi, hi, 1e-6) << s;
    }
}

TEST(ProjectDisk, Example) {
    const auto p = CurveProfile::parabola();
    const Interval i = project_disk(p, 0.5, Disk({0.5, 0.0}, 0.1));
    EXPECT_NEAR(i.lo, -0.1, 1e-10);
    EXPECT_NEAR(i.hi, 0.1, 1e-10);
}

TEST(ProjectDisk, ShrinksToCenterValue) {
    const auto q = CurveProfile::quarter_circle();
    const Point c{0.1, 0.4};
    const Interval i = project_disk(q, 0.2, Disk(c, 1e-9));
    EXPECT_NEAR(i.lo, eval_phi(q, 0.2, c), 1e-8);
    EXPECT_NEAR(i.hi, eval_phi(q, 0.2, c), 1e-8);
}

TEST(ProjectDisk, MatchesBoundarySampling) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const char* name : {"parabola", "quarter_circle", "exp"}) {
        const auto c = CurveProfile::builtin(name);
        for (int k = 0; k < 5; ++k) {
            const double alpha = u(rng);
            const Interval strip = domain_strip(c, alpha);
            const Point center{strip.lo + strip.length() * u(rng), u(rng)};
            const Disk disk(center, 0.05 + 0.2 * u(rng));
            const Interval got = project_disk(c, alpha, disk);
            const Interval want = sampled_disk_image(c, alpha, disk);
            EXPECT_NEAR(got.lo, want.lo, 1e-6) << name;
            EXPECT_NEAR(got.hi, want.hi, 1e-6) << name;
        }
    }
}

TEST(ProjectDisk, MissingTheStripThrows) {
    EXPECT_THROW(project_disk(CurveProfile::parabola(), 0.0, Disk({5, 0}, 0.1)), DomainError);
}

TEST(DirectionSpan, ContainsEverySampledDirection) {
    const auto q = CurveProfile::quarter_circle();
    const Interval alphas{0.3, 0.4}, x1s{-0.05, 0.05};
    const auto span = direction_span(q, alphas, x1s);
    ASSERT_TRUE(span.has_value());
    for (double a = alphas.lo; a <= alphas.hi; a += 0.01) {
        for (double x = x1s.lo; x <= x1s.hi; x += 0.01) {
            const double t = tangent_direction(q, a, {x, 0}).radians();
            double off = t - span->start;
            off -= kPi * std::floor(off / kPi);
            EXPECT_LE(off, span->width + 1e-12);
        }
    }
    EXPECT_FALSE(direction_span(q, {0.3, 0.4}, {-1.0, 0.0}).has_value());
}
