#include "pursuit/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pursuit {

std::string_view to_string(PayoffKind kind) {
    switch (kind) {
    case PayoffKind::hinge:
        return "hinge";
    case PayoffKind::quadratic:
        return "quadratic";
    }
    return "hinge";
}

PayoffKind payoff_kind_from_string(std::string_view name) {
    if (name == "hinge") {
        return PayoffKind::hinge;
    }
    if (name == "quadratic" || name == "quadratic-above-capture" ||
        name == "quadratic_above_capture") {
        return PayoffKind::quadratic;
    }
    throw InvalidArgument("unknown payoff kind '" + std::string(name) + "'");
}

double phi_eval(const PayoffSpec& spec, double x) {
    if (!(x >= 0.0)) {
        throw InvalidArgument("phi_eval: distance must be non-negative");
    }
    const double excess = std::max(x - spec.r_cap, 0.0);
    switch (spec.kind) {
    case PayoffKind::hinge:
        return excess;
    case PayoffKind::quadratic:
        return excess * excess;
    }
    return excess;
}

void GameConfig::validate() const {
    if (!(nu > 0.0 && nu < 1.0)) {
        throw ConfigError("nu must lie in (0, 1)");
    }
    if (!(r_cap > 0.0) || !std::isfinite(r_cap)) {
        throw ConfigError("r_cap must be positive");
    }
    if (!(t_f >= 0.0) || !std::isfinite(t_f)) {
        throw ConfigError("t_f must be non-negative");
    }
    if (n < 0) {
        throw ConfigError("sensing budget n must be non-negative");
    }
    if (phi.r_cap != r_cap) {
        throw ConfigError("payoff r_cap differs from game r_cap");
    }
}

TimeScaling time_scaling(const RawSpeeds& raw) {
    if (!(raw.v_p_max > 0.0) || !(raw.v_e_max > 0.0)) {
        throw InvalidArgument("speeds must be positive");
    }
    if (raw.v_e_max >= raw.v_p_max) {
        throw SlowerPursuer("pursuer must be strictly faster than the evader");
    }
    return TimeScaling{raw.v_p_max};
}

GameConfig normalize_speeds(const RawSpeeds& raw, const PhysicalConfig& physical) {
    const TimeScaling scaling = time_scaling(raw);
    GameConfig cfg;
    cfg.nu = raw.v_e_max / raw.v_p_max;
    cfg.r_cap = physical.r_cap;
    cfg.x_p0 = physical.x_p0;
    cfg.x_e0 = physical.x_e0;
    cfg.t_f = scaling.to_normalized_time(physical.t_f);
    cfg.n = physical.n;
    cfg.phi = PayoffSpec{physical.phi_kind, physical.r_cap};
    cfg.seed = physical.seed;
    cfg.validate();
    return cfg;
}

Vec2 line_of_sight(Vec2 x_p, Vec2 x_e) {
    const Vec2 d = x_e - x_p;
    const double len = norm(d);
    if (!(len > 0.0)) {
        throw DegenerateDirection("line of sight undefined for coincident points");
    }
    return d / len;
}

Vec2 perp(Vec2 r, int theta) {
    if (std::abs(norm(r) - 1.0) > 1e-9) {
        throw InvalidArgument("perp: direction must be a unit vector");
    }
    if (theta != 1 && theta != -1) {
        throw InvalidArgument("perp: theta must be +1 or -1");
    }
    const double s = static_cast<double>(theta);
    return Vec2(-s * r.y(), s * r.x());
}

}  // namespace pursuit
