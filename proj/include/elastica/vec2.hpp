#pragma once

#include <cmath>

namespace elastica {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }

    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// Outward unit normal direction u(theta) and its ccw-rotated companion.
inline Vec2 unit_dir(double theta) { return {std::cos(theta), std::sin(theta)}; }
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

struct Rot2 {
    // Column-major 2x2 rotation [c -s; s c].
    double c = 1.0;
    double s = 0.0;

    static Rot2 from_angle(double a) { return {std::cos(a), std::sin(a)}; }
    Vec2 apply(Vec2 v) const { return {c * v.x - s * v.y, s * v.x + c * v.y}; }
    Rot2 inverse() const { return {c, -s}; }
};

}  // namespace elastica
