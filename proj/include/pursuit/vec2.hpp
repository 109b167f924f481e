#pragma once

#include <cmath>

#include "pursuit/errors.hpp"

namespace pursuit {

/// Planar vector in nondimensional length units. Components are always finite:
/// the public constructor rejects NaN/inf, arithmetic results are checked by
/// the engine before they are committed to a trajectory.
class Vec2 {
public:
    constexpr Vec2() = default;

    Vec2(double x, double y) : x_(x), y_(y) {
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw InvalidArgument("Vec2: non-finite component");
        }
    }

    constexpr double x() const { return x_; }
    constexpr double y() const { return y_; }

    bool is_finite() const { return std::isfinite(x_) && std::isfinite(y_); }

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return raw(a.x_ + b.x_, a.y_ + b.y_); }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return raw(a.x_ - b.x_, a.y_ - b.y_); }
    friend constexpr Vec2 operator-(Vec2 a) { return raw(-a.x_, -a.y_); }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return raw(s * a.x_, s * a.y_); }
    friend constexpr Vec2 operator*(Vec2 a, double s) { return raw(s * a.x_, s * a.y_); }
    friend constexpr Vec2 operator/(Vec2 a, double s) { return raw(a.x_ / s, a.y_ / s); }
    constexpr Vec2& operator+=(Vec2 o) { x_ += o.x_; y_ += o.y_; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x_ -= o.x_; y_ -= o.y_; return *this; }

    friend constexpr bool operator==(Vec2 a, Vec2 b) = default;

private:
    static constexpr Vec2 raw(double x, double y) {
        Vec2 v;
        v.x_ = x;
        v.y_ = y;
        return v;
    }

    double x_ = 0.0;
    double y_ = 0.0;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x() * b.x() + a.y() * b.y(); }
constexpr double cross(Vec2 a, Vec2 b) { return a.x() * b.y() - a.y() * b.x(); }
constexpr double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x(), a.y()); }
inline double distance(Vec2 a, Vec2 b) { return norm(b - a); }

}  // namespace pursuit
