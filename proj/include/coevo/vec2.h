#pragma once

#include <cmath>

namespace coevo {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 v) const { return {x + v.x, y + v.y}; }
    Vec2 operator-(Vec2 v) const { return {x - v.x, y - v.y}; }
    Vec2 operator*(double a) const { return {x * a, y * a}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 v) { x += v.x; y += v.y; return *this; }
    Vec2& operator*=(double a) { x *= a; y *= a; return *this; }
    friend bool operator==(const Vec2&, const Vec2&) = default;

    double dot(Vec2 v) const { return x * v.x + y * v.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }

    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {x * c - y * s, x * s + y * c};
    }

    static Vec2 from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }
    double angle() const { return std::atan2(y, x); }
};

// Shortest signed offset from a to b on a circle of circumference span.
// Assumes |b - a| < 1.5 * span, which holds for in-range coordinates.
inline double torus_delta(double a, double b, double span) {
    double d = b - a;
    if (d > 0.5 * span) d -= span;
    else if (d < -0.5 * span) d += span;
    return d;
}

// Wraps x into [0, span). Pre: x in (-span, 2*span), which holds for any
// in-range coordinate moved by less than one full span.
inline double torus_wrap(double x, double span) {
    if (x >= span) {
        x -= span;
    } else if (x < 0.0) {
        x += span;
        if (x >= span) x = 0.0; // tiny negative input can round up to span
    }
    return x;
}

} // namespace coevo
