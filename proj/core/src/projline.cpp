#include "vblind/projline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vblind/errors.hpp"

namespace vblind {

Chirality opposite(Chirality c) noexcept {
    return c == Chirality::counterclockwise ? Chirality::clockwise : Chirality::counterclockwise;
}

const char* to_string(Chirality c) noexcept {
    return c == Chirality::counterclockwise ? "counterclockwise" : "clockwise";
}

Direction Direction::from_radians(double angle) {
    if (!std::isfinite(angle)) {
        throw PreconditionError("direction angle must be finite");
    }
    double r = std::fmod(angle, kPi);
    if (r < 0.0) {
        r += kPi;
    }
    // fmod of a tiny negative value plus pi rounds up to pi itself
    if (r >= kPi) {
        r = 0.0;
    }
    return Direction(r);
}

Direction Direction::of_vector(double dx, double dy) {
    if (!std::isfinite(dx) || !std::isfinite(dy) || (dx == 0.0 && dy == 0.0)) {
        throw PreconditionError("direction of a zero or non-finite vector");
    }
    return from_radians(std::atan2(dy, dx));
}

Direction normalize(double angle) { return Direction::from_radians(angle); }

double dist(Direction a, Direction b) noexcept {
    double d = std::fabs(a.radians() - b.radians());
    return std::min(d, kPi - d);
}

double sweep(Direction from, Direction to, Chirality c) noexcept {
    double d = c == Chirality::counterclockwise ? to.radians() - from.radians()
                                                : from.radians() - to.radians();
    if (d < 0.0) {
        d += kPi;
    }
    return d >= kPi ? 0.0 : d;
}

Direction advance(Direction from, double by, Chirality c) {
    return normalize(c == Chirality::counterclockwise ? from.radians() + by : from.radians() - by);
}

Arc::Arc(Direction start, Direction end, Chirality chirality)
    : start_(start), end_(end), chirality_(chirality) {
    if (sweep(start, end, chirality) == 0.0) {
        throw PreconditionError("arc of zero length");
    }
}

double Arc::length() const noexcept { return sweep(start_, end_, chirality_); }

Arc Arc::ccw() const {
    if (chirality_ == Chirality::counterclockwise) {
        return *this;
    }
    return Arc(end_, start_, Chirality::counterclockwise);
}

bool arc_contains(const Arc& arc, Direction theta, double tol) noexcept {
    const double len = arc.length();
    const double s = sweep(arc.start(), theta, arc.chirality());
    if (s <= len + tol) {
        return true;
    }
    // theta sits just before the start
    return kPi - s <= tol;
}

bool arc_interior_contains(const Arc& arc, Direction theta, double tol) noexcept {
    const double s = sweep(arc.start(), theta, arc.chirality());
    return s > tol && s < arc.length() - tol;
}

std::vector<Direction> angle_schedule(Direction theta0, Direction theta_small, int m,
                                      Chirality chirality) {
    if (m < 1) {
        throw PreconditionError("angle schedule needs m >= 1, got " + std::to_string(m));
    }
    const double len = sweep(theta0, theta_small, chirality);
    if (len == 0.0) {
        throw PreconditionError("angle schedule endpoints coincide");
    }
    std::vector<Direction> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    out.push_back(theta0);
    for (int k = 1; k < m; ++k) {
        out.push_back(advance(theta0, len * k / m, chirality));
    }
    out.push_back(theta_small);
    return out;
}

}  // namespace vblind
