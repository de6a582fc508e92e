#include <vblind/blinds.hpp>
#include <vblind/errors.hpp>
#include <vblind/measure.hpp>
#include <vblind/verify.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace vblind;

namespace {

constexpr double kTol = 1e-12;

Direction dir(double r) { return Direction::from_radians(r); }

// Meeting point of the line through p in direction s and the line through q in
// direction t, by Cramer's rule on the 2x2 system.
Point meet(Point p, Direction s, Point q, Direction t) {
    const double a11 = std::cos(s.radians()), a21 = std::sin(s.radians());
    const double a12 = -std::cos(t.radians()), a22 = -std::sin(t.radians());
    const double det = a11 * a22 - a12 * a21;
    const double r1 = q.x1 - p.x1, r2 = q.x2 - p.x2;
    const double u = (r1 * a22 - a12 * r2) / det;
    return {p.x1 + u * a11, p.x2 + u * a21};
}

// Quarter circle near the origin: the cover alphas see tangent directions in
// about [2.73, 2.84] and the small alphas see directions within 0.1 of 0.
struct Fixture {
    CurveProfile curve = CurveProfile::quarter_circle();
    AlphaSet a_small = AlphaSet::with_points({{-0.1, 0.1}}, 50);
    AlphaSet a_cover = AlphaSet::with_points({{0.3, 0.4}}, 50);
    Direction theta_cover = dir(2.6);
    Direction theta_small = dir(0.3);
    Segment seg{{0, 0}, {0.01 * std::cos(2.9), 0.01 * std::sin(2.9)}};
};

}  // namespace

TEST(Divide, Examples) {
    const auto two = divide(Segment({0, 0}, {1, 2}), 2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], Segment({0, 0}, {0.5, 1}));
    EXPECT_EQ(two[1], Segment({0.5, 1}, {1, 2}));

    const Segment s({0.3, 0.1}, {0.7, -0.2});
    EXPECT_EQ(divide(s, 1), std::vector<Segment>{s});

    const auto four = divide(Segment({0, 0}, {1, 0}), 4);
    double total = 0;
    for (const auto& p : four) {
        EXPECT_NEAR(p.length(), 0.25, 1e-15);
        total += p.length();
    }
    EXPECT_EQ(total, 1.0);
    EXPECT_THROW(divide(s, 0), PreconditionError);
}

TEST(Rotate, Examples) {
    const Segment r = rotate(Segment({0, 0}, {1, 0}), dir(kPi / 2), dir(3 * kPi / 4));
    EXPECT_NEAR(r.a().x1, 0.0, kTol);
    EXPECT_NEAR(r.b().x1, 0.0, kTol);
    EXPECT_NEAR(r.b().x2, 1.0, kTol);
    EXPECT_NEAR(r.length(), 1.0, kTol);

    const Segment s({0, 0}, {std::sqrt(3.0) / 2, 0.5});
    const Segment h = rotate(s, dir(kPi / 2), dir(0));
    EXPECT_NEAR(h.b().x1, 0.0, kTol);
    EXPECT_NEAR(h.b().x2, 0.5, kTol);
    EXPECT_NEAR(h.length(), 0.5, kTol);
}

TEST(Rotate, AgreesWithLineIntersection) {
    const Segment s({0.2, -0.1}, {0.9, 0.4});
    for (double ts : {0.1, 1.2, 2.0, 3.0}) {
        for (double tc : {0.3, 1.7, 2.5}) {
            if (dist(dir(ts), dir(tc)) < 0.2 || dist(dir(ts), s.direction()) < 0.2 ||
                dist(dir(tc), s.direction()) < 0.2) {
                continue;
            }
            const Segment r = rotate(s, dir(ts), dir(tc));
            const Point c = meet(s.a(), dir(ts), s.b(), dir(tc));
            EXPECT_EQ(r.a(), s.a());
            EXPECT_NEAR(r.b().x1, c.x1, 1e-12);
            EXPECT_NEAR(r.b().x2, c.x2, 1e-12);
            EXPECT_NEAR(dist(r.direction(), dir(ts)), 0.0, 1e-12);
        }
    }
}

TEST(Rotate, StaysInNeighbourhood) {
    const Segment s({0, 0}, {1, 0.3});
    const Direction ts = dir(1.4), tc = dir(2.4);
    const Segment r = rotate(s, ts, tc);
    const double delta =
        2 * std::sin(dist(ts, s.direction())) / std::sin(dist(ts, tc)) * s.length();
    EXPECT_LE(max_distance(r, s), delta / 2 + kTol);
}

TEST(Rotate, RejectsDegenerateAngles) {
    const Segment s({0, 0}, {1, 0});
    EXPECT_THROW(rotate(s, dir(0), dir(1)), PreconditionError);
    EXPECT_THROW(rotate(s, dir(1), dir(1)), PreconditionError);
    EXPECT_THROW(rotate(s, dir(1), dir(0)), PreconditionError);
}

TEST(Rotate, MirrorImageHasSameLength) {
    const Segment s({0, 0}, {1, 0.4});
    const Segment m({0, 0}, {1, -0.4});
    const Segment r = rotate(s, dir(1.9), dir(0.9));
    const Segment rm = rotate(m, dir(kPi - 1.9), dir(kPi - 0.9));
    EXPECT_NE(blind_chirality(s, dir(1.9), dir(0.9)),
              blind_chirality(m, dir(kPi - 1.9), dir(kPi - 0.9)));
    EXPECT_NEAR(r.length(), rm.length(), 1e-14);
    EXPECT_NEAR(r.b().x1, rm.b().x1, 1e-14);
    EXPECT_NEAR(r.b().x2, -rm.b().x2, 1e-14);
}

TEST(Vb, TotalLengthIsInvariant) {
    const Segment s({0, 0}, {std::sqrt(3.0) / 2, 0.5});
    for (int n : {1, 3, 10, 100}) {
        const BlindSet b = vb(s, dir(kPi / 2), dir(0), n);
        ASSERT_EQ(b.segments.size(), static_cast<std::size_t>(n));
        EXPECT_NEAR(b.total_length(), 0.5, 1e-12) << n;
        for (const Segment& blade : b.segments) {
            EXPECT_NEAR(dist(blade.direction(), dir(kPi / 2)), 0.0, 1e-12);
        }
    }
}

TEST(Vb, FinerBlindsStayCloser) {
    const Segment s({0, 0}, {1, 0.2});
    const Direction ts = dir(1.3), tc = dir(2.6);
    const double delta =
        2 * std::sin(dist(ts, s.direction())) / std::sin(dist(ts, tc)) * s.length();
    const BlindSet b = vb(s, ts, tc, 10);
    for (const Segment& blade : b.segments) {
        EXPECT_LE(max_distance(blade, s), delta / 10 + kTol);
    }
}

TEST(Vb, ExpectedChiralityIsEnforced) {
    const Segment s({0, 0}, {1, 0});
    const Chirality c = blind_chirality(s, dir(kPi / 2), dir(3 * kPi / 4));
    EXPECT_NO_THROW(vb(s, dir(kPi / 2), dir(3 * kPi / 4), 2, c));
    EXPECT_THROW(vb(s, dir(kPi / 2), dir(3 * kPi / 4), 2, opposite(c)), PreconditionError);
}

TEST(BranchTree, CountsLeaves) {
    BranchTree t = BranchTree::uniform({2, 3});
    EXPECT_EQ(t.depth(), 2);
    EXPECT_EQ(t.leaf_count(), 6);
    t.set_branching({1}, 5);
    EXPECT_EQ(t.branching({1}), 5);
    EXPECT_EQ(t.branching({0}), 3);
    EXPECT_EQ(t.leaf_count(), 8);
    t.set_branching({}, 1);
    EXPECT_EQ(t.leaf_count(), 3);
    EXPECT_FALSE(t.contains({1}));
    EXPECT_THROW(t.branching({0, 0}), PreconditionError);
    EXPECT_THROW(BranchTree::uniform({}), PreconditionError);
    EXPECT_THROW(BranchTree::constant(2, 0), PreconditionError);
}

TEST(IterVb, TelescopingExample) {
    const Segment s({0, 0}, {std::cos(kPi / 6), std::sin(kPi / 6)});
    const BlindSet b = iter_vb(s, dir(kPi / 2), dir(0), BranchTree::constant(2, 3),
                               Chirality::counterclockwise);
    ASSERT_EQ(b.meta.level_lengths.size(), 3u);
    EXPECT_NEAR(b.meta.level_lengths[0], 1.0, kTol);
    EXPECT_NEAR(b.meta.level_lengths[1], std::sin(kPi / 6) / std::sin(kPi / 3), kTol);
    EXPECT_NEAR(b.meta.level_lengths[2], 0.5, kTol);
    EXPECT_NEAR(b.total_length(), 0.5, kTol);
    EXPECT_EQ(b.segments.size(), 9u);
}

TEST(IterVb, DepthOneIsVb) {
    const Segment s({0.1, 0.2}, {0.6, 0.5});
    const BlindSet a = iter_vb(s, dir(2.0), dir(0.1), BranchTree::constant(1, 7),
                               blind_chirality(s, dir(2.0), dir(0.1)));
    const BlindSet b = vb(s, dir(2.0), dir(0.1), 7);
    EXPECT_EQ(a.segments, b.segments);
}

TEST(IterVb, LeafCountFollowsTree) {
    const Segment s({0, 0}, {1, 0.2});
    BranchTree t = BranchTree::uniform({2, 2, 3});
    t.set_branching({0}, 4);
    t.set_branching({1, 0}, 1);
    const BlindSet b = iter_vb(s, dir(1.8), dir(0.1), t, Chirality::counterclockwise);
    EXPECT_EQ(static_cast<long long>(b.segments.size()), t.leaf_count());
    EXPECT_EQ(b.provenance.size(), b.segments.size());
    for (const TreeIndex& idx : b.provenance) {
        EXPECT_EQ(idx.size(), 3u);
    }
}

TEST(AutoVbCover, TrivialCaseNeedsOnePiece) {
    const Fixture fx;
    const CoverSearchResult r =
        auto_vb_cover(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, fx.a_cover);
    EXPECT_EQ(r.n, 1);
    EXPECT_EQ(r.blinds.segments, vb(fx.seg, fx.theta_small, fx.theta_cover, 1).segments);
}

TEST(AutoVbCover, CoversAndIsMonotoneInTheAlphaSet) {
    const Fixture fx;
    CoverSearchOptions opts;
    opts.neighborhood = 0.001;
    const CoverSearchResult r =
        auto_vb_cover(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, fx.a_cover, opts);
    EXPECT_GT(r.n, 1);
    for (const Segment& blade : r.blinds.segments) {
        EXPECT_LE(max_distance(blade, fx.seg), 0.001);
    }
    const VerificationReport rep =
        check_cover(fx.curve, r.blinds.segments, fx.seg, fx.a_cover, 1e-9);
    EXPECT_TRUE(rep.pass);

    const AlphaSet sub = AlphaSet::with_points({{0.32, 0.35}}, 10);
    const CoverSearchResult rs =
        auto_vb_cover(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, sub, opts);
    EXPECT_LE(rs.n, r.n);
}

TEST(AutoVbCover, ReportsExhaustedSearch) {
    const Fixture fx;
    CoverSearchOptions opts;
    opts.neighborhood = 1e-9;
    opts.n_max = 64;
    EXPECT_THROW(auto_vb_cover(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, fx.a_cover, opts),
                 SearchError);
}

TEST(AutoIterVb, CoversAndShrinksSmallProjections) {
    const Fixture fx;
    const double eps = 0.2;
    const BlindSet b = auto_iter_vb(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, eps,
                                    fx.a_small, fx.a_cover, Chirality::counterclockwise);
    const int m = static_cast<int>(std::floor(sweep(fx.seg.direction(), fx.theta_small,
                                                    Chirality::counterclockwise) / eps)) + 1;
    ASSERT_TRUE(b.meta.tree.has_value());
    EXPECT_EQ(b.meta.tree->depth(), m);
    EXPECT_EQ(static_cast<long long>(b.segments.size()), b.meta.tree->leaf_count());

    const VerificationReport cover =
        check_cover(fx.curve, b.segments, fx.seg, fx.a_cover, 1e-9);
    EXPECT_TRUE(cover.pass);

    const VerificationReport before = check_small(fx.curve, std::vector<Segment>{fx.seg},
                                                  fx.a_small, 1.0);
    const VerificationReport after = check_small(fx.curve, b.segments, fx.a_small, 1.0);
    EXPECT_LT(after.max_measure, before.max_measure);
    for (const Segment& blade : b.segments) {
        EXPECT_LE(max_distance(blade, fx.seg), 2 * eps * fx.seg.length() + kTol);
    }
}

TEST(AutoIterVb, EpsAboveArcGivesOneStage) {
    const Fixture fx;
    const BlindSet b = auto_iter_vb(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, 1.0,
                                    fx.a_small, std::nullopt, Chirality::counterclockwise);
    ASSERT_TRUE(b.meta.tree.has_value());
    EXPECT_EQ(b.meta.tree->depth(), 1);
    const int n = b.meta.tree->branching({});
    EXPECT_EQ(b.segments, vb(fx.seg, fx.theta_small, fx.theta_cover, n).segments);
}

TEST(AutoIterVb, Preconditions) {
    const Fixture fx;
    EXPECT_THROW(auto_iter_vb(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, 0.005,
                              fx.a_small, fx.a_cover, Chirality::counterclockwise),
                 PreconditionError);
    EXPECT_THROW(auto_iter_vb(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, 0.2, fx.a_small,
                              fx.a_cover, Chirality::clockwise),
                 PreconditionError);
    const AlphaSet wrong = AlphaSet::with_points({{-0.6, -0.5}}, 10);
    EXPECT_THROW(auto_iter_vb(fx.curve, fx.seg, fx.theta_small, fx.theta_cover, 0.2, wrong,
                              fx.a_cover, Chirality::counterclockwise),
                 PreconditionError);
}
