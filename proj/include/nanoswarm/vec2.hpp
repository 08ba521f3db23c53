#pragma once

#include <cmath>

namespace nanoswarm {

/// Plain 2-D vector, doubles, value semantics. Positions are in meters.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return s * v; }
    friend Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Counterclockwise rotation by angle beta (radians).
inline Vec2 rotate(Vec2 v, double beta) {
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace nanoswarm
