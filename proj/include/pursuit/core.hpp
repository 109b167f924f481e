#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pursuit/vec2.hpp"

namespace pursuit {

enum class PayoffKind { hinge, quadratic };

/// Terminal payoff phi: zero on [0, r_cap], positive, convex and
/// non-decreasing above it.
struct PayoffSpec {
    PayoffKind kind = PayoffKind::hinge;
    double r_cap = 0.1;
};

std::string_view to_string(PayoffKind kind);
PayoffKind payoff_kind_from_string(std::string_view name);

/// hinge: max(x - r_cap, 0); quadratic: max(x - r_cap, 0)^2.
double phi_eval(const PayoffSpec& spec, double x);

/// Game parameters in the nondimensional frame (pursuer max speed 1).
struct GameConfig {
    double nu = 0.7;
    double r_cap = 0.1;
    Vec2 x_p0{};
    Vec2 x_e0{1.0, 0.0};
    double t_f = 10.0;
    int n = 0;
    PayoffSpec phi{};
    std::uint64_t seed = 0;

    double rho0() const { return distance(x_p0, x_e0); }
    /// Throws ConfigError unless 0 < nu < 1, r_cap > 0, t_f >= 0, n >= 0 and
    /// phi.r_cap == r_cap.
    void validate() const;
};

struct RawSpeeds {
    double v_p_max = 1.0;
    double v_e_max = 0.5;
};

/// Same content as GameConfig but with times in physical units and no nu.
struct PhysicalConfig {
    double r_cap = 0.1;
    Vec2 x_p0{};
    Vec2 x_e0{1.0, 0.0};
    double t_f = 10.0;
    int n = 0;
    PayoffKind phi_kind = PayoffKind::hinge;
    std::uint64_t seed = 0;
};

/// Time dilation by c = v_p_max: xbar(t) = x(t / c), vbar(t) = v(t / c) / c.
/// Lengths are unchanged.
struct TimeScaling {
    double c = 1.0;

    double to_normalized_time(double t_physical) const { return c * t_physical; }
    double to_physical_time(double t_normalized) const { return t_normalized / c; }
    Vec2 to_normalized_velocity(Vec2 v_physical) const { return v_physical / c; }
    Vec2 to_physical_velocity(Vec2 v_normalized) const { return c * v_normalized; }
};

TimeScaling time_scaling(const RawSpeeds& raw);

/// Maps a physical-unit game to the frame where the pursuer has speed 1.
/// Throws SlowerPursuer when v_e_max >= v_p_max.
GameConfig normalize_speeds(const RawSpeeds& raw, const PhysicalConfig& physical);

/// Unit vector from pursuer to evader. Throws DegenerateDirection on coincidence.
Vec2 line_of_sight(Vec2 x_p, Vec2 x_e);

/// theta * (-r.y, r.x): counterclockwise for theta = +1.
/// Throws InvalidArgument when r is not unit (1e-9) or theta is not +-1.
Vec2 perp(Vec2 r, int theta);

}  // namespace pursuit
