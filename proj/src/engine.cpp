#include "pursuit/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pursuit/parallel.hpp"

namespace pursuit {

Vec2 Trajectory::position_at(double t) const {
    if (segments.empty()) {
        throw InvalidArgument("empty trajectory");
    }
    auto it = std::upper_bound(segments.begin(), segments.end(), t,
                               [](double value, const Segment& s) { return value < s.t_end; });
    if (it == segments.end()) {
        return segments.back().end_position();
    }
    return it->position_at(std::max(t, it->t_start));
}

double Trajectory::path_length() const {
    double total = 0.0;
    for (const Segment& s : segments) {
        total += norm(s.velocity) * s.duration();
    }
    return total;
}

namespace {

struct Overlap {
    double t0;
    double t1;
    Vec2 gap;   // evader - pursuer at t0
    Vec2 rate;  // d(gap)/dt
};

std::optional<Overlap> overlap_of(const Segment& p, const Segment& e) {
    const double t0 = std::max(p.t_start, e.t_start);
    const double t1 = std::min(p.t_end, e.t_end);
    if (t1 < t0) {
        return std::nullopt;
    }
    return Overlap{t0, t1, e.position_at(t0) - p.position_at(t0), e.velocity - p.velocity};
}

}  // namespace

std::optional<double> detect_capture(const Segment& pursuer, const Segment& evader, double r_cap) {
    const auto ov = overlap_of(pursuer, evader);
    if (!ov) {
        return std::nullopt;
    }
    const double r2 = r_cap * r_cap;
    const double c = norm_sq(ov->gap) - r2;
    if (c <= 0.0) {
        return ov->t0;
    }
    const double a = norm_sq(ov->rate);
    const double b = 2.0 * dot(ov->gap, ov->rate);
    if (a == 0.0 || b >= 0.0) {
        return std::nullopt;  // separation constant or non-decreasing
    }
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        if (disc < -1e-12 * b * b) {
            return std::nullopt;
        }
        disc = 0.0;  // tangent within tolerance
    }
    // b < 0, so q > 0 and the smaller root c/q avoids cancellation.
    const double q = 0.5 * (-b + std::sqrt(disc));
    const double s = c / q;
    if (ov->t0 + s <= ov->t1) {
        return ov->t0 + s;
    }
    return std::nullopt;
}

double min_separation(const Segment& pursuer, const Segment& evader) {
    const auto ov = overlap_of(pursuer, evader);
    if (!ov) {
        throw InvalidArgument("segments do not overlap in time");
    }
    const double a = norm_sq(ov->rate);
    double s = 0.0;
    if (a > 0.0) {
        s = std::clamp(-dot(ov->gap, ov->rate) / a, 0.0, ov->t1 - ov->t0);
    }
    return norm(ov->gap + s * ov->rate);
}

double payoff_of(bool captured, double final_distance, const PayoffSpec& phi) {
    return captured ? 0.0 : phi_eval(phi, final_distance);
}

namespace {

constexpr double kSpeedSlack = 1e-12;

void require_finite(Vec2 v, const char* what) {
    if (!v.is_finite()) {
        throw NumericalError(std::string("non-finite ") + what);
    }
}

}  // namespace

SimulationResult simulate(const GameConfig& config, const PursuerPolicy& pursuer,
                          const EvaderPolicy& evader, const ThetaStream& theta,
                          EngineLimits limits) {
    config.validate();
    const GameView view = GameView::of(config);
    SimulationResult result{Outcome{}, Trajectory{}, Trajectory{},
                            SensingLog(config.x_p0, config.x_e0, config.n)};
    SensingLog& log = result.log;
    Outcome& out = result.outcome;

    double t = 0.0;
    Vec2 xp = config.x_p0;
    Vec2 xe = config.x_e0;

    auto finish_captured = [&](double when, double separation) {
        out.captured = true;
        out.capture_time = when;
        out.final_distance = separation;
    };

    if (distance(xp, xe) <= config.r_cap) {
        finish_captured(0.0, distance(xp, xe));
    }

    std::size_t events = 0;
    while (!out.captured && t < config.t_f) {
        if (++events > limits.max_events) {
            throw NumericalError("event limit exceeded");
        }
        const PursuerInfo p_info{t, xp, log, view,
                                 pursuer.full_observation ? std::optional<Vec2>(xe) : std::nullopt};
        const PursuerAction pa = pursuer.decide(p_info);
        if (pa.sense_now) {
            log.record(t, xp, xe);
            continue;
        }
        const EvaderAction ea = evader.decide(EvaderInfo{t, xe, xp, log, view}, theta);

        if (!(pa.speed_fraction >= 0.0 && pa.speed_fraction <= 1.0)) {
            throw InvalidArgument(pursuer.name + ": speed fraction outside [0, 1]");
        }
        const Vec2 vp = pa.speed_fraction * pa.heading;
        const Vec2 ve = ea.velocity;
        require_finite(vp, "pursuer velocity");
        require_finite(ve, "evader velocity");
        if (norm(vp) > 1.0 + kSpeedSlack) {
            throw InvalidArgument(pursuer.name + ": pursuer speed above 1");
        }
        if (norm(ve) > config.nu + kSpeedSlack) {
            throw InvalidArgument(evader.name + ": evader speed above nu");
        }

        const double t_next = std::min({pa.hold_until, ea.hold_until, config.t_f});
        if (!(t_next > t)) {
            throw std::logic_error("strategy stalled at t = " + std::to_string(t));
        }

        Segment ps{t, t_next, xp, vp};
        Segment es{t, t_next, xe, ve};
        if (const auto hit = detect_capture(ps, es, config.r_cap)) {
            ps.t_end = es.t_end = *hit;
            if (ps.t_end > ps.t_start) {
                result.pursuer.segments.push_back(ps);
                result.evader.segments.push_back(es);
            }
            finish_captured(*hit, distance(ps.end_position(), es.end_position()));
            break;
        }
        result.pursuer.segments.push_back(ps);
        result.evader.segments.push_back(es);
        xp = ps.end_position();
        xe = es.end_position();
        require_finite(xp, "pursuer position");
        require_finite(xe, "evader position");
        t = t_next;
    }

    if (!out.captured) {
        out.final_distance = distance(xp, xe);
    }
    out.payoff = payoff_of(out.captured, out.final_distance, config.phi);
    out.sensing_times.assign(log.times().begin() + 1, log.times().end());
    return result;
}

double exact_expected_payoff(const GameConfig& config, const PursuerPolicy& pursuer,
                             const EvaderPolicy& evader) {
    const int intervals = config.n + 1;
    if (intervals > kMaxEnumeratedIntervals) {
        throw EnumerationCap("theta enumeration limited to " +
                             std::to_string(kMaxEnumeratedIntervals) + " intervals");
    }
    const std::size_t branches = std::size_t{1} << intervals;
    std::vector<double> payoffs(branches);
    parallel_for(branches, [&](std::size_t mask) {
        const ThetaStream theta = ThetaStream::from_bits(mask, static_cast<std::size_t>(intervals));
        payoffs[mask] = simulate(config, pursuer, evader, theta).outcome.payoff;
    });
    // Fixed index order keeps the sum independent of scheduling.
    double sum = 0.0;
    for (double v : payoffs) {
        sum += v;
    }
    return sum / static_cast<double>(branches);
}

}  // namespace pursuit
