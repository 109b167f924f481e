#include "pursuit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pursuit/errors.hpp"
#include "pursuit/parallel.hpp"
#include "pursuit/value.hpp"

namespace pursuit {

Json to_json(const RunManifest& m) {
    return Json{{"command", m.command},
                {"argv", m.argv},
                {"config", m.config},
                {"seed", m.seed},
                {"version", m.version},
                {"outputs", m.outputs},
                {"duration_seconds", round9(m.duration_seconds)}};
}

RunManifest manifest_from_json(const Json& j) {
    RunManifest m;
    try {
        m.command = j.at("command").get<std::string>();
        m.argv = j.at("argv").get<std::vector<std::string>>();
        m.config = j.value("config", Json::object());
        m.seed = j.value("seed", std::uint64_t{0});
        m.version = j.value("version", std::string());
        m.outputs = j.value("outputs", std::vector<std::string>{});
        m.duration_seconds = j.value("duration_seconds", 0.0);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed manifest: ") + e.what());
    }
    return m;
}

namespace {

using Clock = std::chrono::steady_clock;

struct GridAxis {
    double lo = 0.0;
    double hi = 0.0;
    int steps = 1;

    void check(const char* name, bool allow_zero) const {
        if (steps < 1) {
            throw ConfigError(std::string(name) + " steps must be positive");
        }
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
            throw ConfigError(std::string(name) + " range must satisfy min <= max");
        }
        if (steps == 1 && lo != hi) {
            throw ConfigError(std::string(name) + " range with one step must have min == max");
        }
        if (lo < 0.0 || (!allow_zero && lo == 0.0)) {
            throw ConfigError(std::string(name) + " values must be " + (allow_zero ? "non-negative" : "positive"));
        }
    }
    // Grid points are rounded to the output precision so the CSV reproduces
    // the exact inputs.
    double at(int i) const { return round9(steps <= 1 ? lo : lo + (hi - lo) * i / (steps - 1)); }
};

void finish_manifest(RunManifest& m, Clock::time_point start, const std::filesystem::path& where) {
    m.duration_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    write_text(where, dump(to_json(m)));
}

std::filesystem::path manifest_beside(const std::filesystem::path& file) {
    return std::filesystem::path(file.string() + ".manifest.json");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out, RunManifest& manifest,
          Clock::time_point start) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    write_text(out_path, text);
    manifest.outputs.push_back(out_path);
    finish_manifest(manifest, start, manifest_beside(out_path));
    out << "wrote " << out_path << "\n";
}

// simulate -------------------------------------------------------------------

int cmd_simulate(const std::string& config_path, std::optional<std::uint64_t> seed, const std::string& out_dir,
                 RunManifest manifest, std::ostream& out) {
    const auto start = Clock::now();
    Scenario s = load_scenario(config_path);
    if (seed) {
        s.config.seed = *seed;
    }
    const SimulationResult sim = simulate(s.config, make_pursuer(s.pursuer), make_evader(s.evader, s.script),
                                          ThetaStream::seeded(s.config.seed));
    const std::filesystem::path dir(out_dir);
    write_text(dir / "outcome.json", dump(to_json(sim.outcome)));
    write_text(dir / "trajectory.csv", trajectory_csv(sim));
    manifest.config = to_json(s);
    manifest.seed = s.config.seed;
    manifest.outputs = {(dir / "outcome.json").string(), (dir / "trajectory.csv").string()};
    finish_manifest(manifest, start, dir / "manifest.json");

    const Outcome& o = sim.outcome;
    if (o.captured) {
        out << "captured t=" << format_number(*o.capture_time) << "\n";
    } else {
        out << "not captured, final distance " << format_number(o.final_distance) << "\n";
    }
    out << "payoff = " << format_number(o.payoff) << "\n";
    out << "sensings = " << o.sensing_times.size() << "\n";
    return kExitOk;
}

// value-grid -----------------------------------------------------------------

struct ValueGridArgs {
    std::string config_path;
    double nu = 0.7;
    double r_cap = 0.1;
    std::string phi = "hinge";
    GridAxis rho{0.0, 2.0, 301};
    GridAxis tau{0.0, 10.0, 301};
    std::vector<int> ells{0};
    std::string out_path;
};

int cmd_value_grid(const ValueGridArgs& a, RunManifest manifest, std::ostream& out) {
    const auto start = Clock::now();
    GameConfig base;
    if (!a.config_path.empty()) {
        base = load_scenario(a.config_path).config;
    } else {
        base.nu = a.nu;
        base.r_cap = a.r_cap;
        base.phi = PayoffSpec{payoff_kind_from_string(a.phi), a.r_cap};
        base.validate();
    }
    a.rho.check("rho", true);
    a.tau.check("tau", true);
    for (int ell : a.ells) {
        if (ell < 0) {
            throw ConfigError("ell must be non-negative");
        }
    }
    const std::size_t per_ell = static_cast<std::size_t>(a.rho.steps) * static_cast<std::size_t>(a.tau.steps);
    std::vector<std::string> rows(per_ell * a.ells.size());
    parallel_for(rows.size(), [&](std::size_t k) {
        const int ell = a.ells[k / per_ell];
        const std::size_t idx = k % per_ell;
        const double rho = a.rho.at(static_cast<int>(idx / static_cast<std::size_t>(a.tau.steps)));
        const double tau = a.tau.at(static_cast<int>(idx % static_cast<std::size_t>(a.tau.steps)));
        const ValueBound v = v_bound(ValueQuery{rho, tau, ell}, base.phi, base.nu, base.r_cap);
        std::ostringstream row;
        row << format_number(rho) << ',' << format_number(tau) << ',' << ell << ',' << format_number(v.value) << ','
            << to_string(v.case_tag) << ',' << (v.is_tight ? 1 : 0) << '\n';
        rows[k] = row.str();
    });
    std::string csv = "rho,tau,ell,value,case_tag,is_tight\n";
    for (const std::string& r : rows) {
        csv += r;
    }
    manifest.config = Json{{"nu", round9(base.nu)},
                           {"r_cap", round9(base.r_cap)},
                           {"phi", std::string(to_string(base.phi.kind))},
                           {"rho", {a.rho.lo, a.rho.hi, a.rho.steps}},
                           {"tau", {a.tau.lo, a.tau.hi, a.tau.steps}},
                           {"ell", a.ells}};
    emit(csv, a.out_path, out, manifest, start);
    return kExitOk;
}

// compare-nmax ---------------------------------------------------------------

int cmd_compare_nmax(double rho0, double r_cap, const GridAxis& nu_axis, const std::string& out_path,
                     RunManifest manifest, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    if (nu_axis.steps < 1 || !(nu_axis.lo > 0.0) || !(nu_axis.hi < 1.0) || nu_axis.lo > nu_axis.hi) {
        throw ConfigError("nu range must lie strictly inside (0, 1) with min <= max");
    }
    nu_axis.check("nu", false);
    if (!(r_cap > 0.0) || !(rho0 >= r_cap)) {
        throw ConfigError("need rho0 >= r_cap > 0");
    }
    std::string csv = "nu,aleem_n_max,prop1_n_max\n";
    bool ordered = true;
    for (int i = 0; i < nu_axis.steps; ++i) {
        const double nu = nu_axis.at(i);
        const int aleem = aleem_n_max(rho0, r_cap, nu);
        const int prop1 = prop1_n_max(rho0, r_cap, nu);
        ordered = ordered && prop1 <= aleem;
        csv += format_number(nu) + "," + std::to_string(aleem) + "," + std::to_string(prop1) + "\n";
    }
    manifest.config = Json{{"rho0", rho0}, {"r_cap", r_cap}, {"nu", {nu_axis.lo, nu_axis.hi, nu_axis.steps}}};
    emit(csv, out_path, out, manifest, start);
    if (!ordered) {
        err << "prop1_n_max exceeds aleem_n_max somewhere on the grid\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

// degradation ----------------------------------------------------------------

int cmd_degradation(double rho0, double r_cap, double tf_frac, const std::vector<double>& nus,
                    const std::string& phi_name, const std::string& out_path, RunManifest manifest,
                    std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    if (!(r_cap > 0.0) || !(rho0 > r_cap) || !(tf_frac >= 0.0)) {
        throw ConfigError("need rho0 > r_cap > 0 and tf-frac >= 0");
    }
    const PayoffSpec phi{payoff_kind_from_string(phi_name), r_cap};
    std::string csv = "nu,n,beta,delta,continuous_payoff,n_star\n";
    bool holds = true;
    for (double nu : nus) {
        if (!(nu > 0.0 && nu < 1.0)) {
            throw ConfigError("nu values must lie in (0, 1)");
        }
        const double t_f = tf_frac * (rho0 - r_cap) / (1.0 - nu);
        DegradationReport rep;
        try {
            rep = degradation(rho0, t_f, nu, r_cap, phi);
        } catch (const RegionNotCovered& e) {
            err << "warning: nu=" << format_number(nu) << " skipped: " << e.what() << "\n";
            continue;
        }
        for (int n = 0; n <= rep.n_star; ++n) {
            const std::optional<double> beta = beta_coefficient(n, rho0, t_f, nu);
            const double delta = n < rep.n_star ? rep.delta[static_cast<std::size_t>(n)] : rep.delta_at_n_star;
            csv += format_number(nu) + "," + std::to_string(n) + "," + (beta ? format_number(*beta) : "") + "," +
                   format_number(delta) + "," + format_number(rep.continuous_payoff) + "," +
                   std::to_string(rep.n_star) + "\n";
        }
        if (!rep.jensen_bound_holds) {
            holds = false;
            err << "delta(n) < beta(n) * continuous_payoff for nu=" << format_number(nu) << "\n";
        }
    }
    manifest.config = Json{{"rho0", rho0}, {"r_cap", r_cap}, {"tf_frac", tf_frac}, {"nu", nus},
                           {"phi", phi_name}};
    emit(csv, out_path, out, manifest, start);
    return holds ? kExitOk : kExitVerificationFailed;
}

// verify ---------------------------------------------------------------------

const std::vector<std::string> kSuites = {"pursuer", "evader", "jensen", "jensen_corrected", "capture_time",
                                          "oracle"};
// Each dense-oracle scenario takes up to 6e5 steps; the suite is capped so
// `verify all` stays within a few minutes.
constexpr std::size_t kMaxOracleTrials = 100;

VerificationReport run_suite(const std::string& suite, const GameConfig& cfg, std::size_t trials,
                             std::uint64_t seed) {
    if (suite == "pursuer") {
        return pursuer_guarantee_check(cfg, trials, seed);
    }
    if (suite == "evader") {
        return evader_guarantee_check(cfg, DeviationGrid::standard(cfg));
    }
    if (suite == "jensen") {
        return jensen_bound_check(random_jensen_points(trials, seed));
    }
    if (suite == "jensen_corrected") {
        return jensen_bound_check(random_jensen_points(trials, seed), JensenForm::corrected);
    }
    if (suite == "capture_time") {
        return capture_time_bound_check(cfg.nu, cfg.rho0(), cfg.r_cap, trials, seed);
    }
    return oracle_agreement_check(std::min(trials, kMaxOracleTrials), seed);
}

int cmd_verify(const std::string& suite, std::size_t trials, std::optional<std::uint64_t> seed,
               const std::string& config_path, const std::string& out_path, RunManifest manifest,
               std::ostream& out) {
    const auto start = Clock::now();
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = kSuites;
    } else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end()) {
        suites = {suite};
    } else {
        throw ConfigError("unknown suite '" + suite +
                          "' (pursuer, evader, jensen, jensen_corrected, capture_time, oracle, all)");
    }
    if (trials == 0) {
        throw ConfigError("--trials must be positive");
    }
    GameConfig cfg;
    if (!config_path.empty()) {
        cfg = load_scenario(config_path).config;
    }
    const std::uint64_t master = seed.value_or(cfg.seed);
    Json reports = Json::array();
    bool all_passed = true;
    for (const std::string& name : suites) {
        const VerificationReport r = run_suite(name, cfg, trials, master);
        all_passed = all_passed && r.passed();
        out << name << ": " << (r.skipped ? "SKIPPED" : r.passed() ? "PASS" : "FAIL") << " (trials " << r.trials
            << ", worst " << format_number(r.worst_violation) << ", tol " << format_number(r.tolerance)
            << ", violations " << r.violation_count << ")";
        if (!r.note.empty()) {
            out << " " << r.note;
        }
        out << "\n";
        for (const auto& [key, value] : r.stats) {
            out << "  " << key << " = " << format_number(value) << "\n";
        }
        reports.push_back(to_json(r));
    }
    manifest.config = to_json(cfg);
    manifest.seed = master;
    if (!out_path.empty()) {
        write_text(out_path, dump(Json{{"passed", all_passed}, {"reports", reports}}));
        manifest.outputs.push_back(out_path);
        finish_manifest(manifest, start, manifest_beside(out_path));
    }
    return all_passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pursuit-evasion with intermittent sensing"};
    app.name("pursuit");
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto* sim = app.add_subcommand("simulate", "Run one game and write outcome.json, trajectory.csv");
    std::string sim_config;
    std::optional<std::uint64_t> sim_seed;
    std::string sim_out = "pursuit-out";
    sim->add_option("--config", sim_config, "Scenario JSON")->required();
    sim->add_option("--seed", sim_seed, "Overrides the config seed (theta stream)");
    sim->add_option("--out", sim_out, "Output directory")->capture_default_str();

    auto* grid = app.add_subcommand("value-grid", "Evaluate v_bound on a (rho, tau) grid");
    ValueGridArgs g;
    grid->add_option("--config", g.config_path, "Take nu, r_cap and phi from a config file");
    grid->add_option("--nu", g.nu)->capture_default_str();
    grid->add_option("--r-cap", g.r_cap)->capture_default_str();
    grid->add_option("--phi", g.phi, "hinge | quadratic")->capture_default_str();
    grid->add_option("--rho-min", g.rho.lo)->capture_default_str();
    grid->add_option("--rho-max", g.rho.hi)->capture_default_str();
    grid->add_option("--rho-steps", g.rho.steps)->capture_default_str();
    grid->add_option("--tau-min", g.tau.lo)->capture_default_str();
    grid->add_option("--tau-max", g.tau.hi)->capture_default_str();
    grid->add_option("--tau-steps", g.tau.steps)->capture_default_str();
    grid->add_option("--ell", g.ells, "Remaining sensings (repeatable)")->delimiter(',');
    grid->add_option("--out", g.out_path, "CSV path (stdout when omitted)");

    auto* nmax = app.add_subcommand("compare-nmax", "Sensing budgets of the two capture schemes vs nu");
    double nm_rho0 = 5.0;
    double nm_rcap = 0.1;
    GridAxis nm_nu{0.05, 0.95, 19};
    std::string nm_out;
    nmax->add_option("--rho0", nm_rho0)->capture_default_str();
    nmax->add_option("--r-cap", nm_rcap)->capture_default_str();
    nmax->add_option("--nu-min", nm_nu.lo)->capture_default_str();
    nmax->add_option("--nu-max", nm_nu.hi)->capture_default_str();
    nmax->add_option("--nu-steps", nm_nu.steps)->capture_default_str();
    nmax->add_option("--out", nm_out, "CSV path (stdout when omitted)");

    auto* deg = app.add_subcommand("degradation", "Payoff loss from a finite sensing budget");
    double dg_rho0 = 5.0;
    double dg_rcap = 0.1;
    double dg_frac = 0.9;
    std::vector<double> dg_nus{0.5, 0.6, 0.7, 0.8};
    std::string dg_phi = "hinge";
    std::string dg_out;
    deg->add_option("--rho0", dg_rho0)->capture_default_str();
    deg->add_option("--r-cap", dg_rcap)->capture_default_str();
    deg->add_option("--tf-frac", dg_frac, "t_f = frac * (rho0 - r_cap) / (1 - nu)")->capture_default_str();
    deg->add_option("--nu", dg_nus, "Comma-separated nu values")->delimiter(',');
    deg->add_option("--phi", dg_phi)->capture_default_str();
    deg->add_option("--out", dg_out, "CSV path (stdout when omitted)");

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    std::string vf_suite;
    std::size_t vf_trials = 1000;
    std::optional<std::uint64_t> vf_seed;
    std::string vf_config;
    std::string vf_out;
    ver->add_option("suite", vf_suite,
                    "pursuer | evader | jensen | jensen_corrected | capture_time | oracle | all")
        ->required();
    ver->add_option("--trials", vf_trials)->capture_default_str();
    ver->add_option("--seed", vf_seed, "Master seed (defaults to the config seed)");
    ver->add_option("--config", vf_config, "Game config (defaults to the built-in config)");
    ver->add_option("--out", vf_out, "Report JSON path");

    auto* rep = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    std::string rp_manifest;
    rep->add_option("manifest", rp_manifest)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    RunManifest manifest;
    manifest.argv = args;
    try {
        if (sim->parsed()) {
            manifest.command = "simulate";
            return cmd_simulate(sim_config, sim_seed, sim_out, manifest, out);
        }
        if (grid->parsed()) {
            manifest.command = "value-grid";
            return cmd_value_grid(g, manifest, out);
        }
        if (nmax->parsed()) {
            manifest.command = "compare-nmax";
            return cmd_compare_nmax(nm_rho0, nm_rcap, nm_nu, nm_out, manifest, out, err);
        }
        if (deg->parsed()) {
            manifest.command = "degradation";
            return cmd_degradation(dg_rho0, dg_rcap, dg_frac, dg_nus, dg_phi, dg_out, manifest, out, err);
        }
        if (ver->parsed()) {
            manifest.command = "verify";
            return cmd_verify(vf_suite, vf_trials, vf_seed, vf_config, vf_out, manifest, out);
        }
        const RunManifest recorded = manifest_from_json(read_json_file(rp_manifest));
        if (recorded.version != kToolVersion) {
            err << "warning: manifest written by version " << recorded.version << "\n";
        }
        if (!recorded.argv.empty() && recorded.argv.front() == "replay") {
            throw ConfigError("refusing to replay a replay manifest");
        }
        return run_cli(recorded.argv, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace pursuit
