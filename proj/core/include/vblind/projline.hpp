#pragma once

#include <numbers>
#include <vector>

namespace vblind {

inline constexpr double kPi = std::numbers::pi;

enum class Chirality { counterclockwise, clockwise };

Chirality opposite(Chirality c) noexcept;
const char* to_string(Chirality c) noexcept;

// An unoriented direction in the plane, i.e. a point of R / pi Z.
// The stored representative is always in [0, pi).
class Direction {
public:
    constexpr Direction() = default;

    static Direction from_radians(double angle);
    // Direction of the vector (dx, dy); the zero vector is rejected.
    static Direction of_vector(double dx, double dy);

    constexpr double radians() const noexcept { return angle_; }

    friend constexpr bool operator==(Direction, Direction) = default;

private:
    constexpr explicit Direction(double a) : angle_(a) {}
    double angle_ = 0.0;
};

Direction normalize(double angle);

// Natural metric on R / pi Z, with values in [0, pi/2].
double dist(Direction a, Direction b) noexcept;

// Length of the arc travelled from `from` to `to` in the given sense, in [0, pi).
double sweep(Direction from, Direction to, Chirality c) noexcept;

// Move `by` radians from `from` in the given sense.
Direction advance(Direction from, double by, Chirality c);

class Arc {
public:
    Arc(Direction start, Direction end, Chirality chirality);

    Direction start() const noexcept { return start_; }
    Direction end() const noexcept { return end_; }
    Chirality chirality() const noexcept { return chirality_; }
    double length() const noexcept;

    // The same point set described counterclockwise.
    Arc ccw() const;

    friend bool operator==(const Arc&, const Arc&) = default;

private:
    Direction start_;
    Direction end_;
    Chirality chirality_;
};

// Closed-arc membership; tol widens the arc at both ends.
bool arc_contains(const Arc& arc, Direction theta, double tol = 0.0) noexcept;
// Open-arc membership; tol shrinks the arc at both ends.
bool arc_interior_contains(const Arc& arc, Direction theta, double tol = 0.0) noexcept;

// [theta_0, ..., theta_m] equally spaced along the arc from theta0 to theta_small.
// The last entry is theta_small exactly.
std::vector<Direction> angle_schedule(Direction theta0, Direction theta_small, int m,
                                      Chirality chirality);

}  // namespace vblind
