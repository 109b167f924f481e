#include "pursuit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pursuit/parallel.hpp"

namespace pursuit {

void VerificationReport::record(double excess, const std::string& description, const GameConfig& config) {
    worst_violation = std::max(worst_violation, excess);
    if (excess > tolerance) {
        ++violation_count;
        if (violations.size() < kMaxRecordedViolations) {
            violations.push_back(Violation{description, config, excess});
        }
    }
}

void VerificationReport::absorb(const VerificationReport& other) {
    trials += other.trials;
    worst_violation = std::max(worst_violation, other.worst_violation);
    violation_count += other.violation_count;
    for (const Violation& v : other.violations) {
        if (violations.size() < kMaxRecordedViolations) {
            violations.push_back(v);
        }
    }
}

EvaderScript random_evader_script(Rng& rng, double nu, double horizon) {
    const int switches = rng.uniform_int(1, 5);
    std::vector<double> cuts;
    cuts.reserve(static_cast<std::size_t>(switches) + 2);
    cuts.push_back(0.0);
    for (int i = 0; i < switches; ++i) {
        cuts.push_back(rng.uniform(0.0, std::max(horizon, 1e-6)));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(kForever);
    EvaderScript script;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i + 1] > cuts[i])) {
            continue;
        }
        const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const double speed = rng.uniform01() < 0.5 ? nu : rng.uniform(0.0, nu);
        script.push_back(ScriptLeg{cuts[i], cuts[i + 1], speed * Vec2(std::cos(angle), std::sin(angle))});
    }
    return script;
}

ExpectedPayoff expected_payoff(const GameConfig& config, const PursuerPolicy& pursuer,
                               const EvaderPolicy& evader, std::size_t mc_samples, std::uint64_t seed) {
    if (config.n + 1 <= kMaxEnumeratedIntervals) {
        return ExpectedPayoff{exact_expected_payoff(config, pursuer, evader), 0.0, true,
                              std::size_t{1} << (config.n + 1)};
    }
    std::vector<double> payoffs(mc_samples);
    parallel_for(mc_samples, [&](std::size_t i) {
        payoffs[i] = simulate(config, pursuer, evader, ThetaStream::seeded(derive_seed(seed, i))).outcome.payoff;
    });
    double sum = 0.0;
    for (double v : payoffs) {
        sum += v;
    }
    const double mean = sum / static_cast<double>(mc_samples);
    double ss = 0.0;
    for (double v : payoffs) {
        ss += (v - mean) * (v - mean);
    }
    const double variance = mc_samples > 1 ? ss / static_cast<double>(mc_samples - 1) : 0.0;
    return ExpectedPayoff{mean, std::sqrt(variance / static_cast<double>(mc_samples)), false, mc_samples};
}

// Deviation policies -----------------------------------------------------------

PursuerPolicy endpoint_deviation(double alpha1, double alpha2) {
    std::ostringstream name;
    name << "endpoint(" << alpha1 << "," << alpha2 << ")";
    return PursuerPolicy{name.str(), false, [alpha1, alpha2](const PursuerInfo& info) {
                             const Vec2 r = line_of_sight(info.log.pursuer_at(0), info.log.evader_at(0));
                             const Vec2 offset = alpha1 * r + alpha2 * perp(r, 1);
                             const double length = norm(offset);
                             const double horizon = info.game.t_f;
                             if (length == 0.0 || horizon <= 0.0) {
                                 return PursuerAction::move(r, 0.0, kForever);
                             }
                             return PursuerAction::move(offset / length, std::min(1.0, length / horizon), kForever);
                         }};
}

namespace {

std::optional<double> nominal_first_sensing_time(double rho, double tau, int ell, double nu, double r_cap) {
    if (ell == 0 || nu * rho <= r_cap) {
        return std::nullopt;
    }
    if (thm1_waits(rho, tau, ell, nu, r_cap)) {
        return rho + thm1_wait_time(rho, tau, ell, nu);
    }
    return rho;
}

}  // namespace

std::optional<double> nominal_first_sensing(const GameConfig& config) {
    return nominal_first_sensing_time(config.rho0(), config.t_f, config.n, config.nu, config.r_cap);
}

PursuerPolicy first_stage_deviation(double heading_angle, double speed_fraction,
                                    std::optional<double> sense_time) {
    if (!(speed_fraction > 0.0 && speed_fraction <= 1.0)) {
        throw InvalidArgument("speed fraction must lie in (0, 1]");
    }
    std::ostringstream name;
    name << "first_stage(psi=" << heading_angle << ",gamma=" << speed_fraction;
    if (sense_time) {
        name << ",sense=" << *sense_time;
    }
    name << ")";
    return PursuerPolicy{
        name.str(), false, [heading_angle, speed_fraction, sense_time](const PursuerInfo& info) {
            const SensingLog& log = info.log;
            if (log.requests() > 0) {
                return pursuer_thm1(info);
            }
            const double rho = log.last_rho();
            const Vec2 r = log.last_line_of_sight();
            const Vec2 heading = std::cos(heading_angle) * r + std::sin(heading_angle) * perp(r, 1);
            const double move_end = rho / speed_fraction;
            double sense_at = kForever;
            if (log.budget_remaining() > 0) {
                const auto nominal = nominal_first_sensing_time(rho, info.game.t_f, log.budget_remaining(),
                                                                info.game.nu, info.game.r_cap);
                if (sense_time) {
                    sense_at = *sense_time;
                } else if (nominal) {
                    sense_at = *nominal;
                }
            }
            const double tol = 1e-9 * std::max(1.0, sense_at == kForever ? 1.0 : sense_at);
            if (info.time >= sense_at - tol) {
                return PursuerAction::sense();
            }
            if (info.time < move_end - 1e-12 * std::max(1.0, move_end)) {
                return PursuerAction::move(heading, speed_fraction, std::min(move_end, sense_at));
            }
            return PursuerAction::move(heading, 0.0, sense_at);
        }};
}

// Pursuer-side guarantee ---------------------------------------------------------

namespace {

EvaderPolicy perpendicular_evader() {
    return EvaderPolicy{"perpendicular", [](const EvaderInfo& info, const ThetaStream& theta) {
                            const Vec2 r = info.log.last_line_of_sight();
                            return EvaderAction{info.game.nu * perp(r, theta.at(info.log.last_index())), kForever};
                        }};
}

std::string describe_trial(const std::string& evader, std::uint64_t seed) {
    std::ostringstream s;
    s << evader << " (trial seed " << seed << ")";
    return s.str();
}

}  // namespace

VerificationReport pursuer_guarantee_check(const GameConfig& config, std::size_t trials, std::uint64_t seed) {
    config.validate();
    VerificationReport report;
    report.suite = "pursuer";
    report.tolerance = kExactTol;
    const ValueBound bound = v_bound(ValueQuery{config.rho0(), config.t_f, config.n}, config.phi,
                                     config.nu, config.r_cap);
    const PursuerPolicy pursuer = make_pursuer(PursuerKind::thm1);

    struct Run {
        double payoff = 0.0;
        bool captured = false;
        std::string label;
    };
    std::vector<Run> runs(trials);
    parallel_for(trials, [&](std::size_t i) {
        const std::uint64_t trial_seed = derive_seed(seed, i);
        Rng rng(trial_seed);
        const EvaderPolicy evader =
            make_evader(EvaderKind::scripted, random_evader_script(rng, config.nu, std::max(config.t_f, 1.0)));
        const Outcome out = simulate(config, pursuer, evader, ThetaStream::constant(1)).outcome;
        runs[i] = Run{out.payoff, out.captured, describe_trial("scripted", trial_seed)};
    });

    // Structured family.
    const auto add_structured = [&](const EvaderPolicy& evader, const ThetaStream& theta, const std::string& label) {
        const Outcome out = simulate(config, pursuer, evader, theta).outcome;
        runs.push_back(Run{out.payoff, out.captured, label});
    };
    add_structured(make_evader(EvaderKind::radial), ThetaStream::constant(1), "radial");
    for (int side : {1, -1}) {
        add_structured(perpendicular_evader(), ThetaStream::constant(side),
                       side > 0 ? "perpendicular(+)" : "perpendicular(-)");
    }
    const std::size_t equilibrium_draws = std::min<std::size_t>(64, std::size_t{1} << std::min(config.n + 1, 6));
    for (std::size_t k = 0; k < equilibrium_draws; ++k) {
        add_structured(make_evader(EvaderKind::equilibrium), ThetaStream::seeded(derive_seed(seed ^ 0xE0, k)),
                       "equilibrium#" + std::to_string(k));
    }
    if (in_omega0(config.rho0(), config.t_f, config.nu, config.r_cap)) {
        for (int side : {1, -1}) {
            add_structured(make_evader(EvaderKind::safe_heuristic), ThetaStream::constant(side),
                           side > 0 ? "safe_heuristic(+)" : "safe_heuristic(-)");
        }
    }

    std::size_t captured = 0;
    double max_payoff = 0.0;
    for (const Run& run : runs) {
        report.record(run.payoff - bound.value, run.label, config);
        captured += run.captured ? 1 : 0;
        max_payoff = std::max(max_payoff, run.payoff);
    }
    report.trials = runs.size();
    report.note = std::string("bound case ") + std::string(to_string(bound.case_tag)) +
                  (bound.is_tight ? "" : " (upper bound only, not tight)");
    report.add_stat("v_bound", bound.value);
    report.add_stat("max_payoff", max_payoff);
    report.add_stat("captured_runs", static_cast<double>(captured));
    return report;
}

// Evader-side guarantee -----------------------------------------------------------

DeviationGrid DeviationGrid::standard(const GameConfig& config) {
    DeviationGrid grid;
    grid.alpha1 = Range{-config.t_f, config.t_f, 50};
    grid.alpha2 = Range{-config.t_f, config.t_f, 50};
    for (int i = -4; i <= 4; ++i) {
        grid.heading_angles.push_back(i * std::numbers::pi / 8.0);
    }
    grid.speed_fractions = {0.25, 0.5, 0.75, 1.0};
    for (int i = 1; i <= 25; ++i) {
        grid.sensing_times.push_back(config.t_f * i / 25.0);
    }
    return grid;
}

VerificationReport evader_guarantee_check(const GameConfig& config, const DeviationGrid& grid,
                                          std::size_t mc_samples) {
    config.validate();
    VerificationReport report;
    report.suite = "evader";
    report.tolerance = kExactTol;
    const ValueBound bound = v_bound(ValueQuery{config.rho0(), config.t_f, config.n}, config.phi,
                                     config.nu, config.r_cap);
    report.add_stat("v_bound", bound.value);
    if (!bound.is_tight) {
        report.skipped = true;
        report.note = "two-sided check skipped: query lies in the non-tight region";
        return report;
    }
    const bool nominal_is_minimizer =
        bound.case_tag == CaseTag::stage0_case2a || bound.case_tag == CaseTag::wait_region;
    const EvaderPolicy evader = make_evader(EvaderKind::equilibrium);

    struct Candidate {
        PursuerPolicy policy;
        bool nominal = false;
    };
    std::vector<Candidate> candidates;
    if (config.n == 0) {
        for (int i = 0; i < grid.alpha1.steps; ++i) {
            for (int j = 0; j < grid.alpha2.steps; ++j) {
                const double a1 = grid.alpha1.at(i);
                const double a2 = grid.alpha2.at(j);
                if (std::hypot(a1, a2) <= config.t_f) {
                    candidates.push_back({endpoint_deviation(a1, a2), false});
                }
            }
        }
        if (config.rho0() <= config.t_f) {
            candidates.push_back({endpoint_deviation(config.rho0(), 0.0), bound.case_tag == CaseTag::stage0_case2a});
        }
    }
    for (double psi : grid.heading_angles) {
        for (double gamma : grid.speed_fractions) {
            candidates.push_back({first_stage_deviation(psi, gamma), false});
        }
    }
    if (config.n > 0) {
        for (double ts : grid.sensing_times) {
            if (ts > 0.0) {
                candidates.push_back({first_stage_deviation(0.0, 1.0, ts), false});
            }
        }
    }
    candidates.push_back({make_pursuer(PursuerKind::thm1), true});

    std::vector<ExpectedPayoff> values(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        values[i] = expected_payoff(config, candidates[i].policy, evader, mc_samples, config.seed + i);
    }

    double min_value = kForever;
    std::string argmin;
    double nominal_gap = 0.0;
    bool all_exact = true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const ExpectedPayoff& v = values[i];
        all_exact = all_exact && v.exact;
        const double margin = v.exact ? 0.0 : 4.0 * v.standard_error;
        report.record(bound.value - (v.mean + margin), candidates[i].policy.name, config);
        if (v.mean < min_value) {
            min_value = v.mean;
            argmin = candidates[i].policy.name;
        }
        if (candidates[i].nominal && nominal_is_minimizer) {
            const double gap = std::abs(v.mean - bound.value) - margin;
            nominal_gap = std::max(nominal_gap, gap);
            report.record(gap, "nominal pursuer misses the bound: " + candidates[i].policy.name, config);
        }
    }
    report.trials = candidates.size();
    report.note = std::string("bound case ") + std::string(to_string(bound.case_tag)) + "; minimizer " + argmin +
                  (all_exact ? "" : "; Monte Carlo fallback used");
    report.add_stat("min_expected_payoff", min_value);
    report.add_stat("nominal_gap", nominal_gap);
    return report;
}

// Jensen inequality ---------------------------------------------------------------

double jensen_expectation(const JensenPoint& p) {
    const double along = p.rho - p.alpha1;
    const double reach = p.nu * p.tau;
    return 0.5 * (std::hypot(along, reach - p.alpha2) + std::hypot(along, -reach - p.alpha2));
}

double jensen_lower_bound(const JensenPoint& p) {
    const double along = p.rho - p.alpha1;
    const double reach = p.nu * p.tau;
    return std::sqrt(along * along + reach * reach + p.alpha2 * p.alpha2);
}

double jensen_lower_bound_corrected(const JensenPoint& p) {
    return std::hypot(p.rho - p.alpha1, p.nu * p.tau);
}

VerificationReport jensen_bound_check(const std::vector<JensenPoint>& points, JensenForm form) {
    constexpr double kEqualityTol = 1e-12;
    VerificationReport report;
    report.suite = form == JensenForm::original ? "jensen" : "jensen_corrected";
    report.tolerance = kEqualityTol;
    std::size_t equality_points = 0;
    double min_strict_gap = kForever;
    for (const JensenPoint& p : points) {
        if (std::hypot(p.alpha1, p.alpha2) > p.tau * (1.0 + 1e-15)) {
            throw PreconditionError("jensen_bound_check: |alpha| exceeds tau");
        }
        const double lhs = jensen_expectation(p);
        const double rhs = form == JensenForm::original ? jensen_lower_bound(p) : jensen_lower_bound_corrected(p);
        const double scale = std::max(1.0, rhs);
        GameConfig cfg;
        cfg.nu = p.nu;
        cfg.t_f = p.tau;
        cfg.x_e0 = Vec2(p.rho, 0.0);
        std::ostringstream desc;
        desc << "alpha=(" << p.alpha1 << "," << p.alpha2 << ")";
        report.record((rhs - lhs) / scale, "inequality " + desc.str(), cfg);
        if (p.alpha2 == 0.0) {
            ++equality_points;
            report.record(std::abs(lhs - rhs) / scale, "equality expected " + desc.str(), cfg);
        } else {
            const double gap = (lhs - rhs) / scale;
            min_strict_gap = std::min(min_strict_gap, gap);
            // Strictness: the gap must be resolvable above the equality tolerance.
            if (!(gap > kEqualityTol)) {
                report.record(kEqualityTol * 2.0, "strict inequality expected " + desc.str(), cfg);
            }
        }
    }
    report.trials = points.size();
    report.add_stat("equality_points", static_cast<double>(equality_points));
    report.add_stat("min_strict_gap", min_strict_gap == kForever ? 0.0 : min_strict_gap);
    return report;
}

std::vector<JensenPoint> random_jensen_points(std::size_t count, std::uint64_t seed) {
    std::vector<JensenPoint> points;
    points.reserve(count);
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        JensenPoint p;
        p.rho = rng.uniform(0.05, 5.0);
        p.tau = rng.uniform(0.05, 5.0);
        p.nu = rng.uniform(0.05, 0.95);
        const double radius = p.tau * std::sqrt(rng.uniform01());
        const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
        p.alpha1 = radius * std::cos(angle);
        p.alpha2 = (i % 10 == 0) ? 0.0 : radius * std::sin(angle);
        if (i % 10 == 0) {
            p.alpha1 = rng.uniform(-p.tau, p.tau);
        }
        points.push_back(p);
    }
    return points;
}

// Capture-time bound ---------------------------------------------------------------

VerificationReport capture_time_bound_check(double nu, double rho0, double r_cap, std::size_t trials,
                                            std::uint64_t seed) {
    VerificationReport report;
    report.suite = "capture_time";
    report.tolerance = kExactTol;
    const double horizon = (rho0 - r_cap) / (1.0 - nu);
    const int n_max = prop1_n_max(rho0, r_cap, nu);
    const Corollary1 cor = corollary1(rho0, r_cap, nu);

    GameConfig config;
    config.nu = nu;
    config.r_cap = r_cap;
    config.phi = PayoffSpec{PayoffKind::hinge, r_cap};
    config.x_p0 = Vec2(0.0, 0.0);
    config.x_e0 = Vec2(rho0, 0.0);
    config.t_f = 2.0 * horizon + 1.0;
    config.n = n_max + 5;
    config.seed = seed;
    const PursuerPolicy pursuer = make_pursuer(PursuerKind::prop1);

    struct Run {
        Outcome outcome;
        double path = 0.0;
        std::string label;
    };
    std::vector<Run> runs(trials);
    parallel_for(trials, [&](std::size_t i) {
        const std::uint64_t trial_seed = derive_seed(seed, i);
        Rng rng(trial_seed);
        const EvaderPolicy evader = make_evader(EvaderKind::scripted, random_evader_script(rng, nu, horizon));
        SimulationResult sim = simulate(config, pursuer, evader, ThetaStream::constant(1));
        runs[i] = Run{sim.outcome, sim.pursuer.path_length(), describe_trial("scripted", trial_seed)};
    });

    double worst_time = 0.0;
    std::size_t max_sensings = 0;
    double max_path = 0.0;
    for (const Run& run : runs) {
        const Outcome& o = run.outcome;
        if (!o.captured) {
            report.record(1.0, "not captured: " + run.label, config);
            continue;
        }
        worst_time = std::max(worst_time, *o.capture_time);
        max_sensings = std::max(max_sensings, o.sensing_times.size());
        max_path = std::max(max_path, run.path);
        report.record(*o.capture_time - horizon, "capture time: " + run.label, config);
        report.record(static_cast<double>(o.sensing_times.size()) - n_max, "sensing count: " + run.label, config);
        report.record((run.path - cor.max_distance) / std::max(1.0, cor.max_distance), "path length: " + run.label,
                      config);
    }

    const SimulationResult radial = simulate(config, pursuer, make_evader(EvaderKind::radial), ThetaStream::constant(1));
    const double radial_time = radial.outcome.capture_time.value_or(kForever);
    report.record(std::abs(radial_time - horizon), "radial evader must attain the capture-time bound", config);
    report.record(static_cast<double>(radial.outcome.sensing_times.size()) - n_max, "radial sensing count", config);

    const SimulationResult still = simulate(config, pursuer, make_evader(EvaderKind::scripted), ThetaStream::constant(1));
    const double still_time = still.outcome.capture_time.value_or(kForever);
    report.record(std::abs(still_time - (rho0 - r_cap)), "stationary evader capture time", config);

    report.trials = trials + 2;
    report.add_stat("capture_time_bound", horizon);
    report.add_stat("worst_capture_time", worst_time);
    report.add_stat("radial_capture_time", radial_time);
    report.add_stat("radial_sensings", static_cast<double>(radial.outcome.sensing_times.size()));
    report.add_stat("stationary_capture_time", still_time);
    report.add_stat("prop1_n_max", n_max);
    report.add_stat("max_sensings", static_cast<double>(max_sensings));
    report.add_stat("corollary1_max_distance", cor.max_distance);
    report.add_stat("max_path_length", max_path);
    return report;
}

// Dense oracle ------------------------------------------------------------------

Outcome dense_oracle(const GameConfig& config, const PursuerPolicy& pursuer, const EvaderPolicy& evader,
                     const ThetaStream& theta, double dt) {
    if (!(dt > 0.0)) {
        throw InvalidArgument("dense_oracle: dt must be positive");
    }
    config.validate();
    const GameView view = GameView::of(config);
    SensingLog log(config.x_p0, config.x_e0, config.n);
    Outcome out;
    double t = 0.0;
    Vec2 xp = config.x_p0;
    Vec2 xe = config.x_e0;
    if (distance(xp, xe) <= config.r_cap) {
        out.captured = true;
        out.capture_time = 0.0;
    }
    while (!out.captured && t < config.t_f) {
        const PursuerAction pa = pursuer.decide(
            PursuerInfo{t, xp, log, view, pursuer.full_observation ? std::optional<Vec2>(xe) : std::nullopt});
        if (pa.sense_now) {
            log.record(t, xp, xe);
            continue;
        }
        const EvaderAction ea = evader.decide(EvaderInfo{t, xe, xp, log, view}, theta);
        const double step = std::min({dt, pa.hold_until - t, ea.hold_until - t, config.t_f - t});
        if (!(step > 0.0)) {
            throw std::logic_error("dense_oracle: strategy stalled");
        }
        xp += (step * pa.speed_fraction) * pa.heading;
        xe += step * ea.velocity;
        t = (config.t_f - t <= step) ? config.t_f : t + step;
        if (distance(xp, xe) <= config.r_cap) {
            out.captured = true;
            out.capture_time = t;
        }
    }
    out.final_distance = distance(xp, xe);
    out.payoff = payoff_of(out.captured, out.final_distance, config.phi);
    out.sensing_times.assign(log.times().begin() + 1, log.times().end());
    return out;
}

OracleScenario random_oracle_scenario(std::uint64_t seed) {
    Rng rng(seed);
    OracleScenario s;
    GameConfig& c = s.config;
    c.nu = rng.uniform(0.3, 0.9);
    c.r_cap = rng.uniform(0.05, 0.2);
    c.phi = PayoffSpec{rng.uniform01() < 0.5 ? PayoffKind::hinge : PayoffKind::quadratic, c.r_cap};
    const double rho0 = rng.uniform(1.2 * c.r_cap, 3.0);
    const double angle = rng.uniform(-std::numbers::pi, std::numbers::pi);
    c.x_p0 = Vec2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    c.x_e0 = c.x_p0 + rho0 * Vec2(std::cos(angle), std::sin(angle));
    c.t_f = rng.uniform(0.5, 6.0);
    c.n = rng.uniform_int(0, 4);
    c.seed = seed;
    const int pick_p = rng.uniform_int(0, 2);
    s.pursuer = pick_p == 0 ? PursuerKind::prop1 : pick_p == 1 ? PursuerKind::thm1 : PursuerKind::aleem;
    const int pick_e = rng.uniform_int(0, 2);
    s.evader = pick_e == 0 ? EvaderKind::radial : pick_e == 1 ? EvaderKind::equilibrium : EvaderKind::scripted;
    if (s.evader == EvaderKind::scripted) {
        s.script = random_evader_script(rng, c.nu, c.t_f);
    }
    s.theta_seed = derive_seed(seed, 17);
    return s;
}

VerificationReport oracle_agreement_check(std::size_t trials, std::uint64_t seed, double dt) {
    VerificationReport report;
    report.suite = "oracle";
    report.tolerance = 1.0;
    struct Pair {
        Outcome exact;
        Outcome dense;
        GameConfig config;
    };
    std::vector<Pair> pairs(trials);
    parallel_for(trials, [&](std::size_t i) {
        const OracleScenario s = random_oracle_scenario(derive_seed(seed, i));
        const PursuerPolicy p = make_pursuer(s.pursuer);
        const EvaderPolicy e = make_evader(s.evader, s.script);
        const ThetaStream theta = ThetaStream::seeded(s.theta_seed);
        pairs[i] = Pair{simulate(s.config, p, e, theta).outcome, dense_oracle(s.config, p, e, theta, dt), s.config};
    });
    std::size_t captured = 0;
    for (const Pair& pair : pairs) {
        const double envelope = dt * (1.0 + pair.config.nu);
        if (pair.exact.captured != pair.dense.captured) {
            report.record(kForever, "capture disagreement", pair.config);
            continue;
        }
        if (pair.exact.captured) {
            ++captured;
            report.record(std::abs(*pair.exact.capture_time - *pair.dense.capture_time) / envelope,
                          "capture time", pair.config);
        } else {
            report.record(std::abs(pair.exact.final_distance - pair.dense.final_distance) / envelope,
                          "final distance", pair.config);
        }
    }
    report.trials = trials;
    report.note = "violation measured in units of dt*(1+nu)";
    report.add_stat("dt", dt);
    report.add_stat("captured_scenarios", static_cast<double>(captured));
    return report;
}

}  // namespace pursuit
