#pragma once

#include <cstdint>

#include "vblind/geometry.hpp"

namespace vblind {

// The line y = a + b x.
struct LineParam {
    double a = 0.0;  // intercept
    double b = 0.0;  // slope
};

// Meeting point of the vertical line x = c with the parabola y = x^2 + a x + b.
Point parabola_slice(double a, double b, double c);

// Meeting point of the vertical line x = c with the line y = a + b x.
Point line_slice(LineParam p, double c);

// |(a + b c) - n_c * ((a, b) . (cos t, sin t))| with t = atan c and
// n_c = sqrt(1 + c^2): the slice at x = c is the orthogonal projection in
// direction t, scaled by n_c.
double similarity_residual(LineParam p, double c);

struct DualitySweep {
    double max_similarity_residual = 0.0;
    // max | parabola_slice(a, b, c).y - line_slice({b, a}, c).y - c^2 |
    double max_slice_difference_error = 0.0;
};

DualitySweep duality_sweep(int samples, std::uint64_t seed);

}  // namespace vblind
