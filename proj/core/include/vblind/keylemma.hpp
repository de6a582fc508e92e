#pragma once

#include <optional>
#include <vector>

#include "vblind/alpha_set.hpp"
#include "vblind/blinds.hpp"
#include "vblind/curve.hpp"
#include "vblind/measure.hpp"

namespace vblind {

// Polygonal curve whose segments are tangent to the fiber arc
// {fiber_point(y, t) : t in subrange}. Segment i runs from vertices[i] to
// vertices[i + 1] and touches the arc at curve parameter tangency_params[i].
struct PolyChain {
    std::vector<Point> vertices;
    std::vector<double> tangency_params;
    Point y;
    Interval subrange;

    std::vector<Segment> segments() const;
};

// Image of the fiber arc under the projection at alpha: y2 + diff_interval.
IntervalUnion fiber_projection(const CurveProfile& curve, Point y, Interval subrange,
                               double alpha);

// Distance from p to the fiber arc, by 1-D minimization over the curve parameter.
double distance_to_fiber(const CurveProfile& curve, Point y, Interval subrange, Point p);

// Alphas at which the closed r-neighbourhood of the fiber arc meets the strip.
Interval alpha_reach(const CurveProfile& curve, Point y, Interval subrange, double r);

// Chain tangent at `points` equally spaced parameters (points >= 2).
PolyChain tangent_chain(const CurveProfile& curve, Point y, Interval subrange, int points);

// Largest angle between a chain segment and the fiber tangent at its tangency point.
double tangency_residual(const CurveProfile& curve, const PolyChain& chain);

// Largest distance from the chain to the fiber arc (vertices and segment quarter points).
double chain_fiber_distance(const CurveProfile& curve, const PolyChain& chain);

struct PolygonOptions {
    int n0 = 2;
    int n_max = 1 << 16;
    int alpha_points = 100;
};

// Doubles the number of tangency points until every segment is shorter than
// eps, the chain lies within delta of the arc and its projections contain the
// arc's projections on an alpha grid spanning [-N_box, N_box].
PolyChain polygon_approx(const CurveProfile& curve, Point y, Interval subrange, double eps,
                         double delta, const PolygonOptions& options = {});

// Cover band [cover_lo, cover_hi] and small band [small_lo, small_hi], both
// counterclockwise, in the circular order cover_lo, cover_hi, small_lo, small_hi.
struct AngleBands {
    Direction cover_lo;
    Direction cover_hi;
    Direction small_lo;
    Direction small_hi;
    double eps0 = 0.0;

    Arc cover_arc() const { return Arc(cover_lo, cover_hi, Chirality::counterclockwise); }
    Arc small_arc() const { return Arc(small_lo, small_hi, Chirality::counterclockwise); }
};

// A compact region given as sample points and a radius around them.
struct Region {
    std::vector<Point> samples;
    double radius = 0.0;
};

AngleBands compute_bands(const CurveProfile& curve, const Region& region, const AlphaSet& a_small,
                         const AlphaSet& a_cover);

struct LocalOptions {
    int n_max = 1 << 20;
    int m_max = 64;
};

// Two steps: clockwise blinds turning seg to small_lo with cover direction
// cover_hi, then counterclockwise iterated blinds from small_lo to small_hi
// with cover direction cover_lo on each of them.
BlindSet local_construction(const CurveProfile& curve, const Segment& seg,
                            const AngleBands& bands, const AlphaSet& a_small,
                            const AlphaSet& a_cover, double eps, double delta,
                            const LocalOptions& options = {});

struct KeyOptions {
    int n_max = 1 << 20;
    int m_max = 64;
    int max_halvings = 8;
    int polygon_alpha_points = 100;
    int region_samples = 64;  // points per chain segment when sampling K
};

struct KeyConstruction {
    BlindSet blinds;
    PolyChain chain;
    AlphaSet small_set;  // A_small clipped to [-N_box, N_box]
    double internal_eps = 0.0;
    double delta_used = 0.0;
    int attempts = 0;
};

// Finite union of segments near the fiber arc whose projections contain the
// arc's projections over a_cover and have measure below eps over a_small.
KeyConstruction key_construction(const CurveProfile& curve, Point y, Interval subrange,
                                 const AlphaSet& a_small, const AlphaSet& a_cover, double eps,
                                 double delta, const KeyOptions& options = {});

}  // namespace vblind
