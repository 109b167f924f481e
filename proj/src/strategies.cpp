#include "pursuit/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pursuit/random.hpp"
#include "pursuit/value.hpp"

namespace pursuit {

SensingLog::SensingLog(Vec2 x_p0, Vec2 x_e0, int budget)
    : times_{0.0}, evader_{x_e0}, pursuer_{x_p0}, budget_remaining_(budget) {
    if (budget < 0) {
        throw InvalidArgument("sensing budget must be non-negative");
    }
}

void SensingLog::record(double t, Vec2 x_p, Vec2 x_e) {
    if (budget_remaining_ <= 0) {
        throw BudgetViolation("sensing requested with no budget left");
    }
    if (!(t > times_.back())) {
        throw std::logic_error("sensing instants must strictly increase");
    }
    times_.push_back(t);
    pursuer_.push_back(x_p);
    evader_.push_back(x_e);
    --budget_remaining_;
}

ThetaStream ThetaStream::fixed(std::vector<int> thetas) {
    for (int v : thetas) {
        if (v != 1 && v != -1) {
            throw InvalidArgument("theta values must be +1 or -1");
        }
    }
    ThetaStream s;
    s.mode_ = Mode::fixed;
    s.values_ = std::move(thetas);
    return s;
}

ThetaStream ThetaStream::from_bits(std::uint64_t bits, std::size_t length) {
    if (length > 64) {
        throw InvalidArgument("from_bits supports at most 64 intervals");
    }
    std::vector<int> values(length);
    for (std::size_t i = 0; i < length; ++i) {
        values[i] = ((bits >> i) & 1U) != 0 ? 1 : -1;
    }
    return fixed(std::move(values));
}

ThetaStream ThetaStream::seeded(std::uint64_t seed) {
    ThetaStream s;
    s.mode_ = Mode::seeded;
    s.seed_ = seed;
    return s;
}

ThetaStream ThetaStream::constant(int theta) {
    if (theta != 1 && theta != -1) {
        throw InvalidArgument("theta must be +1 or -1");
    }
    ThetaStream s;
    s.mode_ = Mode::constant;
    s.constant_ = theta;
    return s;
}

int ThetaStream::at(std::size_t interval) const {
    switch (mode_) {
    case Mode::fixed:
        if (interval >= values_.size()) {
            throw InvalidArgument("theta stream exhausted at interval " + std::to_string(interval));
        }
        return values_[interval];
    case Mode::seeded:
        return (derive_seed(seed_, interval) & 1U) != 0 ? 1 : -1;
    case Mode::constant:
        return constant_;
    }
    return 1;
}

// Pursuer policies -----------------------------------------------------------

namespace {

double time_tol(double t) { return 1e-9 * std::max(1.0, std::abs(t)); }

PursuerAction run_along(Vec2 heading) { return PursuerAction::move(heading, 1.0, kForever); }

}  // namespace

PursuerAction pursuer_continuous(const PursuerInfo& info) {
    if (!info.observed_evader) {
        throw PreconditionError("continuous pursuit needs the evader position");
    }
    const Vec2 d = *info.observed_evader - info.own_position;
    if (norm(d) == 0.0) {
        throw CaptureAlready("players coincide");
    }
    return run_along(d / norm(d));
}

PursuerAction pursuer_prop1(const PursuerInfo& info) {
    const SensingLog& log = info.log;
    const double rho = log.last_rho();
    if (rho == 0.0) {
        throw CaptureAlready("players coincided at the last sensing");
    }
    const Vec2 r = log.last_line_of_sight();
    if (info.game.nu * rho <= info.game.r_cap) {
        return run_along(r);
    }
    const double to_go = distance(info.own_position, log.last_evader());
    if (to_go <= kArrivalTol) {
        return log.budget_remaining() > 0 ? PursuerAction::sense() : run_along(r);
    }
    return PursuerAction::move(r, 1.0, info.time + to_go);
}

double thm1_wait_time(double rho, double tau, int ell, double nu) {
    return (1.0 - nu) / (1.0 - std::pow(nu, ell + 1)) * tau - rho;
}

bool thm1_waits(double rho, double tau, int ell, double nu, double r_cap) {
    const double threshold = time_limited_threshold(rho, ell, nu);
    const bool beyond = tau > threshold + kBoundaryRelTol * std::max(tau, threshold);
    return beyond && std::pow(nu, ell + 1) * rho > r_cap;
}

PursuerAction pursuer_thm1(const PursuerInfo& info) {
    const SensingLog& log = info.log;
    const double rho = log.last_rho();
    if (rho == 0.0) {
        throw CaptureAlready("players coincided at the last sensing");
    }
    const double t_k = log.last_time();
    const double tau = info.game.t_f - t_k;
    const int ell = log.budget_remaining();
    const double nu = info.game.nu;
    if (!thm1_waits(rho, tau, ell, nu, info.game.r_cap)) {
        return pursuer_prop1(info);
    }
    const Vec2 r = log.last_line_of_sight();
    const double to_go = distance(info.own_position, log.last_evader());
    if (to_go > kArrivalTol) {
        return PursuerAction::move(r, 1.0, info.time + to_go);
    }
    if (ell == 0) {
        return PursuerAction::move(r, 0.0, kForever);
    }
    const double sense_at = t_k + rho + thm1_wait_time(rho, tau, ell, nu);
    if (info.time >= sense_at - time_tol(sense_at)) {
        return PursuerAction::sense();
    }
    return PursuerAction::move(r, 0.0, sense_at);
}

PursuerAction pursuer_aleem(const PursuerInfo& info) {
    const SensingLog& log = info.log;
    const double rho = log.last_rho();
    if (rho == 0.0) {
        throw CaptureAlready("players coincided at the last sensing");
    }
    const Vec2 r = log.last_line_of_sight();
    if (log.budget_remaining() == 0) {
        return run_along(r);
    }
    const double next = log.last_time() + f_of_nu(info.game.nu) * rho;
    if (info.time >= next - time_tol(next)) {
        return PursuerAction::sense();
    }
    return PursuerAction::move(r, 1.0, next);
}

// Evader policies ------------------------------------------------------------

EvaderAction evader_radial(const EvaderInfo& info) {
    const Vec2 d = info.own_position - info.pursuer_position;
    if (norm(d) == 0.0) {
        throw CaptureAlready("players coincide");
    }
    return EvaderAction{info.game.nu * (d / norm(d)), kForever};
}

bool perpendicular_is_safe(double rho, double nu, double r_cap) {
    return nu * rho > std::sqrt(1.0 + nu * nu) * r_cap;
}

bool perpendicular_is_safe_unscaled(double rho, double nu, double r_cap) {
    return r_cap < std::sqrt(1.0 + nu * nu) * rho;
}

EvaderAction evader_equilibrium(const EvaderInfo& info, const ThetaStream& theta) {
    const SensingLog& log = info.log;
    const Vec2 r = log.last_line_of_sight();
    if (log.budget_remaining() == 0) {
        const double rho = log.last_rho();
        const double tau = info.game.t_f - log.last_time();
        if (tau <= rho) {
            return EvaderAction{info.game.nu * r, kForever};
        }
        if (in_omega0(rho, tau, info.game.nu, info.game.r_cap)) {
            return evader_safe_heuristic(info, theta);
        }
    }
    const int side = theta.at(log.last_index());
    return EvaderAction{info.game.nu * perp(r, side), kForever};
}

namespace {

// Closest approach between the evader fleeing at heading angle psi from the
// sensed point and the pursuer running the straight leg of length rho onto it.
double approach_clearance(double psi, double rho, double nu) {
    const Vec2 start(rho, 0.0);
    const Vec2 rate(nu * std::cos(psi) - 1.0, nu * std::sin(psi));
    const double s = std::clamp(-dot(start, rate) / norm_sq(rate), 0.0, rho);
    return norm(start + s * rate);
}

}  // namespace

double safe_heading_angle(double rho, double nu, double r_cap) {
    const double target = r_cap + 0.5 * (nu * rho - r_cap);
    constexpr double quarter = std::numbers::pi / 2.0;
    if (approach_clearance(quarter, rho, nu) >= target) {
        return quarter;
    }
    double lo = 0.0;
    double hi = quarter;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (approach_clearance(mid, rho, nu) >= target ? lo : hi) = mid;
    }
    return lo;
}

EvaderAction evader_safe_heuristic(const EvaderInfo& info, const ThetaStream& theta) {
    const SensingLog& log = info.log;
    const double rho = log.last_rho();
    const double tau = info.game.t_f - log.last_time();
    if (!in_omega0(rho, tau, info.game.nu, info.game.r_cap)) {
        throw PreconditionError("safe heuristic requires a state inside Omega_0");
    }
    const Vec2 r = log.last_line_of_sight();
    const double psi = safe_heading_angle(rho, info.game.nu, info.game.r_cap);
    const Vec2 heading = std::cos(psi) * r + std::sin(psi) * perp(r, theta.at(log.last_index()));
    return EvaderAction{info.game.nu * heading, kForever};
}

EvaderAction evader_scripted(const EvaderInfo& info, const EvaderScript& script) {
    double next_start = kForever;
    for (const ScriptLeg& leg : script) {
        if (leg.t_start <= info.time && info.time < leg.t_end) {
            return EvaderAction{leg.velocity, leg.t_end};
        }
        if (leg.t_start > info.time) {
            next_start = std::min(next_start, leg.t_start);
        }
    }
    return EvaderAction{Vec2{}, next_start};
}

// Named selection --------------------------------------------------------------

std::string_view to_string(PursuerKind kind) {
    switch (kind) {
    case PursuerKind::continuous: return "continuous";
    case PursuerKind::prop1: return "prop1";
    case PursuerKind::thm1: return "thm1";
    case PursuerKind::aleem: return "aleem";
    }
    return "thm1";
}

std::string_view to_string(EvaderKind kind) {
    switch (kind) {
    case EvaderKind::radial: return "radial";
    case EvaderKind::equilibrium: return "equilibrium";
    case EvaderKind::safe_heuristic: return "safe_heuristic";
    case EvaderKind::scripted: return "scripted";
    }
    return "equilibrium";
}

PursuerKind pursuer_kind_from_string(std::string_view name) {
    for (auto kind : {PursuerKind::continuous, PursuerKind::prop1, PursuerKind::thm1, PursuerKind::aleem}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw InvalidArgument("unknown pursuer strategy '" + std::string(name) + "'");
}

EvaderKind evader_kind_from_string(std::string_view name) {
    for (auto kind : {EvaderKind::radial, EvaderKind::equilibrium, EvaderKind::safe_heuristic,
                      EvaderKind::scripted}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw InvalidArgument("unknown evader strategy '" + std::string(name) + "'");
}

PursuerPolicy make_pursuer(PursuerKind kind) {
    switch (kind) {
    case PursuerKind::continuous:
        return PursuerPolicy{"continuous", true, pursuer_continuous};
    case PursuerKind::prop1:
        return PursuerPolicy{"prop1", false, pursuer_prop1};
    case PursuerKind::thm1:
        return PursuerPolicy{"thm1", false, pursuer_thm1};
    case PursuerKind::aleem:
        return PursuerPolicy{"aleem", false, pursuer_aleem};
    }
    throw InvalidArgument("unknown pursuer kind");
}

EvaderPolicy make_evader(EvaderKind kind, EvaderScript script) {
    switch (kind) {
    case EvaderKind::radial:
        return EvaderPolicy{"radial", [](const EvaderInfo& info, const ThetaStream&) { return evader_radial(info); }};
    case EvaderKind::equilibrium:
        return EvaderPolicy{"equilibrium", evader_equilibrium};
    case EvaderKind::safe_heuristic:
        return EvaderPolicy{"safe_heuristic", evader_safe_heuristic};
    case EvaderKind::scripted:
        return EvaderPolicy{"scripted", [script = std::move(script)](const EvaderInfo& info, const ThetaStream&) {
                                return evader_scripted(info, script);
                            }};
    }
    throw InvalidArgument("unknown evader kind");
}

}  // namespace pursuit
