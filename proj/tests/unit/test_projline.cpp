#include <vblind/errors.hpp>
#include <vblind/geometry.hpp>
#include <vblind/projline.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace vblind;

namespace {

constexpr double kTol = 1e-14;

Direction dir(double r) { return Direction::from_radians(r); }

}  // namespace

TEST(Normalize, MapsIntoHalfOpenRange) {
    EXPECT_NEAR(normalize(0.0).radians(), 0.0, kTol);
    EXPECT_NEAR(normalize(3 * kPi / 2).radians(), kPi / 2, kTol);
    EXPECT_NEAR(normalize(-kPi / 4).radians(), 3 * kPi / 4, kTol);
    EXPECT_NEAR(normalize(kPi).radians(), 0.0, kTol);
    for (double a = -20.0; a < 20.0; a += 0.37) {
        const double r = normalize(a).radians();
        EXPECT_GE(r, 0.0);
        EXPECT_LT(r, kPi);
    }
}

TEST(Normalize, RejectsNonFinite) {
    EXPECT_THROW(normalize(std::nan("")), PreconditionError);
    EXPECT_THROW(normalize(INFINITY), PreconditionError);
}

TEST(Dist, WrapsAround) {
    EXPECT_NEAR(dist(dir(0), dir(3 * kPi / 4)), kPi / 4, kTol);
    EXPECT_NEAR(dist(dir(1.1), dir(1.1)), 0.0, kTol);
    EXPECT_NEAR(dist(dir(kPi / 6), dir(kPi / 2)), kPi / 3, kTol);
}

TEST(Dist, IsSymmetricAndBounded) {
    for (double a = 0; a < kPi; a += 0.3) {
        for (double b = 0; b < kPi; b += 0.23) {
            EXPECT_NEAR(dist(dir(a), dir(b)), dist(dir(b), dir(a)), kTol);
            EXPECT_LE(dist(dir(a), dir(b)), kPi / 2 + kTol);
        }
    }
}

TEST(Sweep, OppositeSensesAddToPi) {
    const Direction a = dir(0.3), b = dir(2.0);
    EXPECT_NEAR(sweep(a, b, Chirality::counterclockwise), 1.7, kTol);
    EXPECT_NEAR(sweep(a, b, Chirality::clockwise), kPi - 1.7, kTol);
}

TEST(ArcContains, Examples) {
    const Arc quarter(dir(0), dir(kPi / 2), Chirality::counterclockwise);
    EXPECT_TRUE(arc_contains(quarter, dir(kPi / 6)));
    EXPECT_FALSE(arc_contains(quarter, dir(3 * kPi / 4)));
    const Arc wrapping(dir(3 * kPi / 4), dir(kPi / 2), Chirality::counterclockwise);
    EXPECT_TRUE(arc_contains(wrapping, dir(0)));
}

TEST(ArcContains, EndpointsAreClosedInteriorIsOpen) {
    const Arc arc(dir(0.2), dir(1.0), Chirality::counterclockwise);
    EXPECT_TRUE(arc_contains(arc, dir(0.2)));
    EXPECT_TRUE(arc_contains(arc, dir(1.0)));
    EXPECT_FALSE(arc_interior_contains(arc, dir(0.2)));
    EXPECT_TRUE(arc_interior_contains(arc, dir(0.6)));
}

TEST(ArcContains, ClockwiseArcIsComplement) {
    const Arc ccw(dir(0.2), dir(1.0), Chirality::counterclockwise);
    const Arc cw(dir(0.2), dir(1.0), Chirality::clockwise);
    for (double t = 0.05; t < kPi; t += 0.1) {
        if (std::abs(t - 0.2) < 1e-9 || std::abs(t - 1.0) < 1e-9) continue;
        EXPECT_NE(arc_contains(ccw, dir(t)), arc_contains(cw, dir(t))) << t;
    }
}

TEST(Arc, RejectsZeroLength) {
    EXPECT_THROW(Arc(dir(0.4), dir(0.4), Chirality::counterclockwise), PreconditionError);
}

TEST(AngleSchedule, Examples) {
    const auto s = angle_schedule(dir(kPi / 6), dir(kPi / 2), 3, Chirality::counterclockwise);
    ASSERT_EQ(s.size(), 4u);
    const double expected[] = {kPi / 6, 5 * kPi / 18, 7 * kPi / 18, kPi / 2};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(s[i].radians(), expected[i], kTol);

    const auto one = angle_schedule(dir(0.3), dir(1.3), 1, Chirality::counterclockwise);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0], dir(0.3));
    EXPECT_EQ(one[1], dir(1.3));

    const auto wrap = angle_schedule(dir(3 * kPi / 4), dir(kPi / 4), 2, Chirality::counterclockwise);
    ASSERT_EQ(wrap.size(), 3u);
    EXPECT_NEAR(wrap[0].radians(), 3 * kPi / 4, kTol);
    EXPECT_NEAR(dist(wrap[1], dir(0)), 0.0, kTol);
    EXPECT_NEAR(wrap[2].radians(), kPi / 4, kTol);
}

TEST(AngleSchedule, LastEntryIsExactAndStepsAreEqual) {
    const Direction from = dir(2.9), to = dir(0.4);
    for (Chirality c : {Chirality::counterclockwise, Chirality::clockwise}) {
        const auto s = angle_schedule(from, to, 7, c);
        EXPECT_EQ(s.back(), to);
        const double step = sweep(from, to, c) / 7;
        for (std::size_t k = 1; k < s.size(); ++k) {
            EXPECT_NEAR(sweep(s[k - 1], s[k], c), step, 1e-12);
        }
    }
}

TEST(AngleSchedule, RejectsBadInput) {
    EXPECT_THROW(angle_schedule(dir(0.1), dir(0.5), 0, Chirality::counterclockwise),
                 PreconditionError);
    EXPECT_THROW(angle_schedule(dir(0.5), dir(0.5), 3, Chirality::counterclockwise),
                 PreconditionError);
}

TEST(Segment, DirectionAndValidation) {
    const Segment s({0, 0}, {1, 1});
    EXPECT_NEAR(s.direction().radians(), kPi / 4, kTol);
    EXPECT_NEAR(Segment({1, 1}, {0, 0}).direction().radians(), kPi / 4, kTol);
    EXPECT_THROW(Segment({1, 1}, {1, 1}), PreconditionError);
    EXPECT_THROW(Segment({0, NAN}, {1, 1}), PreconditionError);
}

TEST(Segment, PointDistance) {
    const Segment s({0, 0}, {2, 0});
    EXPECT_NEAR(point_segment_distance({1, 3}, s), 3.0, kTol);
    EXPECT_NEAR(point_segment_distance({-3, 4}, s), 5.0, kTol);
    EXPECT_NEAR(max_distance(Segment({0, 1}, {2, 2}), s), 2.0, kTol);
}
