#include "vblind/duality.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace vblind {

Point parabola_slice(double a, double b, double c) { return {c, c * c + a * c + b}; }

Point line_slice(LineParam p, double c) { return {c, p.a + p.b * c}; }

double similarity_residual(LineParam p, double c) {
    const double theta = std::atan(c);
    const double n_c = std::sqrt(1.0 + c * c);
    const double projected = p.a * std::cos(theta) + p.b * std::sin(theta);
    return std::fabs((p.a + p.b * c) - n_c * projected);
}

DualitySweep duality_sweep(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    DualitySweep out;
    for (int i = 0; i < samples; ++i) {
        const double a = coef(rng);
        const double b = coef(rng);
        const double c = coef(rng);
        out.max_similarity_residual =
            std::max(out.max_similarity_residual, similarity_residual({a, b}, c));
        // the parabola's linear part a x + b is the line with intercept b and slope a
        const double diff = parabola_slice(a, b, c).x2 - line_slice({b, a}, c).x2;
        out.max_slice_difference_error =
            std::max(out.max_slice_difference_error, std::fabs(diff - c * c));
    }
    return out;
}

}  // namespace vblind
