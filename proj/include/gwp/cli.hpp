// Command-line surface: subcommands params, moments, wavefield,
// contractive and verify, with CSV or JSON output.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical verification failure.
// Output is deterministic and locale-independent; identical configuration
// yields byte-identical output.

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gwp/gwp.hpp"

namespace gwp::cli {

struct RunConfig {
    SystemParams sys = free_mass();
    // dx0 = dp0 = 1 with a negative correlation: the contractive packet.
    InitialGaussian init{0.0, 0.0, 1.0, 1.0, CorrSign::Minus};
    Tolerances tol;
    std::optional<double> xmin, xmax;
    std::optional<int> grid_n;
    std::string format = "csv";
    int precision = 17;
    bool strict = false;
    bool oracle = false;
    // whether omega came from a flag or config file; an oscillator without
    // one gets omega = 1, but an explicit zero must fail validation
    bool omega_given = false;
};

// Locale-independent significant-digit formatting (dot decimal separator).
inline std::string fmt_num(double v, int precision) {
    precision = std::clamp(precision, 1, 17);
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

namespace detail {

inline CorrSign parse_sign(const std::string& s) {
    if (s == "+" || s == "plus") return CorrSign::Plus;
    if (s == "-" || s == "minus") return CorrSign::Minus;
    throw InputError("sign must be '+' or '-', got '" + s + "'");
}

inline SystemKind parse_kind(const std::string& s) {
    if (s == "free") return SystemKind::FreeMass;
    if (s == "osc") return SystemKind::Oscillator;
    throw InputError("system must be 'free' or 'osc', got '" + s + "'");
}

inline void apply_json_config(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (j.contains("system")) {
        const auto& s = j["system"];
        if (s.contains("kind")) cfg.sys.kind = parse_kind(s["kind"].get<std::string>());
        cfg.sys.mass = s.value("mass", cfg.sys.mass);
        if (s.contains("omega")) {
            cfg.sys.omega = s["omega"].get<double>();
            cfg.omega_given = true;
        }
        cfg.sys.hbar = s.value("hbar", cfg.sys.hbar);
    }
    if (j.contains("initial")) {
        const auto& s = j["initial"];
        cfg.init.x0 = s.value("x0", cfg.init.x0);
        cfg.init.p0 = s.value("p0", cfg.init.p0);
        cfg.init.dx0 = s.value("dx0", cfg.init.dx0);
        cfg.init.dp0 = s.value("dp0", cfg.init.dp0);
        if (s.contains("sign")) cfg.init.corr_sign = parse_sign(s["sign"].get<std::string>());
    }
    if (j.contains("grid")) {
        const auto& s = j["grid"];
        if (s.contains("xmin")) cfg.xmin = s["xmin"].get<double>();
        if (s.contains("xmax")) cfg.xmax = s["xmax"].get<double>();
        if (s.contains("n")) cfg.grid_n = s["n"].get<int>();
    }
    if (j.contains("tolerances")) {
        const auto& s = j["tolerances"];
        cfg.tol.uncertainty_eps = s.value("uncertainty_eps", cfg.tol.uncertainty_eps);
        cfg.tol.wronskian_eps = s.value("wronskian_eps", cfg.tol.wronskian_eps);
        cfg.tol.norm_eps = s.value("norm_eps", cfg.tol.norm_eps);
        cfg.tol.oracle_l2_eps = s.value("oracle_l2_eps", cfg.tol.oracle_l2_eps);
    }
    if (j.contains("output")) {
        const auto& s = j["output"];
        cfg.format = s.value("format", cfg.format);
        cfg.precision = s.value("precision", cfg.precision);
    }
    cfg.strict = j.value("strict", cfg.strict);
}

using KvRows = std::vector<std::pair<std::string, double>>;

inline void write_kv(std::ostream& out, const RunConfig& cfg, const KvRows& rows) {
    if (cfg.format == "json") {
        nlohmann::json j;
        for (const auto& [k, v] : rows) j[k] = v;
        out << j.dump(2) << '\n';
        return;
    }
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << k << ',' << fmt_num(v, cfg.precision) << '\n';
}

// Resolved spatial grid: explicit bounds win over the automatic one.
inline GridSpec resolve_grid(const RunConfig& cfg, double t_max) {
    if (cfg.xmin.has_value() != cfg.xmax.has_value())
        throw InputError("--xmin and --xmax must be given together");
    GridSpec g;
    if (cfg.xmin) {
        g.x_min = *cfg.xmin;
        g.x_max = *cfg.xmax;
        g.n = cfg.grid_n.value_or(4096);
    } else {
        g = auto_grid(cfg.sys, cfg.init, t_max, cfg.grid_n.value_or(4096));
    }
    check_grid(g);
    return g;
}

}  // namespace detail

inline int cmd_params(const RunConfig& cfg, std::ostream& out) {
    const InitialGaussian init = validate_initial(cfg.sys, cfg.init, cfg.tol);
    const SqueezeParams sq = solve_squeeze(cfg.sys, init);
    const CoherentAmplitude ca = coherent_alpha(cfg.sys, sq, init.x0, init.p0);
    const MomentSet m = moments(cfg.sys, init, 0.0);
    detail::write_kv(out, cfg,
                     {{"delta", delta(cfg.sys, init, cfg.tol)},
                      {"r", sq.r},
                      {"theta", sq.theta},
                      {"alpha_re", ca.alpha.real()},
                      {"alpha_im", ca.alpha.imag()},
                      {"mean_x", m.mean_x},
                      {"mean_p", m.mean_p},
                      {"var_x", m.var_x},
                      {"var_p", m.var_p},
                      {"cov_xp", m.cov_xp}});
    return 0;
}

inline int cmd_moments(const RunConfig& cfg, double t0, double t1, int steps,
                       std::ostream& out) {
    const InitialGaussian init = validate_initial(cfg.sys, cfg.init, cfg.tol);
    if (t1 < t0) throw InputError("--t1 must be >= --t0");
    if (steps < 1) throw InputError("--steps must be >= 1");
    const auto sample_time = [&](int i) {
        return steps == 1 ? t0 : t0 + (t1 - t0) * i / (steps - 1);
    };
    if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < steps; ++i) {
            const double t = sample_time(i);
            const ClassicalState cs = classical_trajectory(cfg.sys, init.x0, init.p0, t);
            const MomentSet m = moments(cfg.sys, init, t);
            rows.push_back({{"t", t},
                            {"x_c", cs.x_c},
                            {"p_c", cs.p_c},
                            {"var_x", m.var_x},
                            {"var_p", m.var_p},
                            {"cov_xp", m.cov_xp},
                            {"S_c", cs.s_c}});
        }
        out << nlohmann::json{{"samples", rows}}.dump(2) << '\n';
        return 0;
    }
    out << "t,x_c,p_c,var_x,var_p,cov_xp,S_c\n";
    for (int i = 0; i < steps; ++i) {
        const double t = sample_time(i);
        const ClassicalState cs = classical_trajectory(cfg.sys, init.x0, init.p0, t);
        const MomentSet m = moments(cfg.sys, init, t);
        const int p = cfg.precision;
        out << fmt_num(t, p) << ',' << fmt_num(cs.x_c, p) << ',' << fmt_num(cs.p_c, p) << ','
            << fmt_num(m.var_x, p) << ',' << fmt_num(m.var_p, p) << ','
            << fmt_num(m.cov_xp, p) << ',' << fmt_num(cs.s_c, p) << '\n';
    }
    return 0;
}

inline int cmd_wavefield(const RunConfig& cfg, double t, std::ostream& out,
                         std::ostream& err) {
    const InitialGaussian init = validate_initial(cfg.sys, cfg.init, cfg.tol);
    const GridSpec grid = detail::resolve_grid(cfg, t);
    const WaveField wf = evaluate_packet(cfg.sys, init, t, grid, cfg.strict);
    if (!wf.boundary_ok)
        err << "warning: packet is not negligible at the grid boundary\n";
    const double nrm = norm(wf);
    // moments need a normalized field; on a clipped grid report only the norm
    const bool normalized = std::abs(nrm - 1.0) <= cfg.tol.norm_eps;
    if (!normalized)
        err << "warning: field norm deviates from 1; omitting grid moments\n";
    const MomentSet m = normalized ? grid_moments(wf, cfg.sys.hbar, cfg.tol.norm_eps)
                                   : MomentSet{};
    const double dx = grid_dx(grid);

    if (cfg.format == "json") {
        nlohmann::json samples = nlohmann::json::array();
        for (int j = 0; j < grid.n; ++j) {
            const auto& v = wf.values[static_cast<std::size_t>(j)];
            samples.push_back({{"x", grid.x_min + j * dx},
                               {"psi_re", v.real()},
                               {"psi_im", v.imag()},
                               {"abs2", std::norm(v)}});
        }
        nlohmann::json j{{"t", t},
                         {"grid", {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"n", grid.n}}},
                         {"norm", nrm},
                         {"boundary_ok", wf.boundary_ok},
                         {"samples", samples}};
        if (normalized)
            j["moments"] = {{"mean_x", m.mean_x},
                            {"mean_p", m.mean_p},
                            {"var_x", m.var_x},
                            {"var_p", m.var_p},
                            {"cov_xp", m.cov_xp}};
        out << j.dump(2) << '\n';
        return 0;
    }
    const int p = cfg.precision;
    out << "x,psi_re,psi_im,abs2\n";
    for (int j = 0; j < grid.n; ++j) {
        const auto& v = wf.values[static_cast<std::size_t>(j)];
        out << fmt_num(grid.x_min + j * dx, p) << ',' << fmt_num(v.real(), p) << ','
            << fmt_num(v.imag(), p) << ',' << fmt_num(std::norm(v), p) << '\n';
    }
    out << "# t=" << fmt_num(t, p) << '\n';
    out << "# norm=" << fmt_num(nrm, p) << '\n';
    out << "# x_min=" << fmt_num(grid.x_min, p) << '\n';
    out << "# x_max=" << fmt_num(grid.x_max, p) << '\n';
    out << "# n=" << grid.n << '\n';
    out << "# boundary_ok=" << (wf.boundary_ok ? 1 : 0) << '\n';
    if (normalized) {
        out << "# mean_x=" << fmt_num(m.mean_x, p) << '\n';
        out << "# mean_p=" << fmt_num(m.mean_p, p) << '\n';
        out << "# var_x=" << fmt_num(m.var_x, p) << '\n';
        out << "# var_p=" << fmt_num(m.var_p, p) << '\n';
        out << "# cov_xp=" << fmt_num(m.cov_xp, p) << '\n';
    }
    return 0;
}

inline int cmd_contractive(const RunConfig& cfg, std::ostream& out) {
    const InitialGaussian init = validate_initial(cfg.sys, cfg.init, cfg.tol);
    const ContractiveInfo info = contractive_analysis(cfg.sys, init);
    detail::KvRows rows{{"tau", info.tau},
                        {"var_min", info.var_min},
                        {"t_return", info.t_return}};
    if (cfg.oracle) {
        const int samples = 512;
        const OracleMinimum m =
            oracle_contractive_min(cfg.sys, init, info.t_return, samples);
        rows.emplace_back("oracle_t_star", m.t_star);
        rows.emplace_back("oracle_var_star", m.var_star);
        rows.emplace_back("oracle_abs_diff", std::abs(m.var_star - info.var_min));
    }
    detail::write_kv(out, cfg, rows);
    return 0;
}

// ---------------------------------------------------------------------------
// verify: numerical self-checks against the configured tolerances.

struct VerifyCheck {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

namespace detail {

// Deterministic parameter sweeps. The "moderate" draws stay in a regime
// where the saturation defect var_x var_p - cov^2 - hbar^2/4 is evaluable
// at 1e-10 relative: the defect is a difference of products that grow like
// (dp0^2 t/m)^2, so rounding noise scales with them and wild parameter
// draws push it past the tolerance.
class SweepGen {
  public:
    explicit SweepGen(unsigned seed) : rng_(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }
    bool coin() { return std::bernoulli_distribution(0.5)(rng_); }
    SystemParams system(bool osc, bool moderate = false) {
        const double lo = moderate ? 0.8 : 0.5;
        const double hi = moderate ? 1.25 : 2.0;
        SystemParams sys;
        sys.kind = osc ? SystemKind::Oscillator : SystemKind::FreeMass;
        sys.mass = log_uniform(lo, hi);
        sys.hbar = log_uniform(lo, hi);
        if (osc) sys.omega = log_uniform(lo, hi);
        return sys;
    }
    InitialGaussian initial(const SystemParams& sys, bool moderate = false) {
        InitialGaussian g;
        g.x0 = uniform(-3.0, 3.0);
        g.p0 = uniform(-3.0, 3.0);
        g.dx0 = moderate ? log_uniform(0.75, 1.35) : log_uniform(0.4, 2.5);
        const double f_hi = moderate ? 4.0 : 9.0;
        const double factor = coin() && coin() ? 1.0 : uniform(1.0001, f_hi);
        g.dp0 = factor * 0.5 * sys.hbar / g.dx0;
        g.corr_sign = coin() ? CorrSign::Plus : CorrSign::Minus;
        return g;
    }

  private:
    std::mt19937 rng_;
};

inline double rel_dev(double a, double b, double floor) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

inline std::vector<VerifyCheck> run_verify_checks(const RunConfig& cfg, bool full) {
    std::vector<VerifyCheck> checks;
    const auto add = [&](const std::string& name, double measured, double threshold) {
        checks.push_back({name, measured, threshold, measured <= threshold});
    };
    const InitialGaussian init = validate_initial(cfg.sys, cfg.init, cfg.tol);
    const bool osc = cfg.sys.kind == SystemKind::Oscillator;
    const double horizon =
        osc ? 2.0 * 2.0 * std::numbers::pi / cfg.sys.omega : 5.0 * cfg.sys.mass;

    {  // Wronskian of random modes
        SweepGen gen(987654321u);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const SystemParams sys = gen.system(gen.coin());
            const SqueezeParams sq{gen.uniform(0.0, 3.0),
                                   gen.uniform(0.0, 2.0 * std::numbers::pi)};
            const ModeValue mv = general_mode(sys, sq, gen.uniform(-10.0, 10.0));
            worst = std::max(worst,
                             std::abs(wronskian(sys, mv) - std::complex<double>{0.0, 1.0}));
        }
        add("wronskian", worst, cfg.tol.wronskian_eps);
    }
    {  // squeeze <-> variances round trip
        SweepGen gen(24601u);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const SystemParams sys = gen.system(gen.coin());
            const InitialGaussian g = validate_initial(sys, gen.initial(sys));
            const GaussianVariances v = variances_from_squeeze(sys, solve_squeeze(sys, g));
            const double corr = sign_factor(g.corr_sign) * 0.5 * sys.hbar * delta(sys, g);
            worst = std::max({worst, rel_dev(v.dx0_sq, g.dx0 * g.dx0, 1.0),
                              rel_dev(v.dp0_sq, g.dp0 * g.dp0, 1.0),
                              rel_dev(v.dxp0, corr, 0.5 * sys.hbar)});
        }
        add("squeeze_roundtrip", worst, 1e-10);
    }
    {  // dual-route moments and saturation
        SweepGen gen(55667788u);
        double worst_mom = 0.0, worst_sat = 0.0;
        for (int i = 0; i < 20; ++i) {
            const SystemParams sys = gen.system(gen.coin(), true);
            const InitialGaussian g = validate_initial(sys, gen.initial(sys, true));
            for (int j = 0; j <= 10; ++j) {
                const double t = -10.0 + 2.0 * j;
                const MomentSet a = moments(sys, g, t);
                const MomentSet b = moments_closed_form(sys, g, t);
                worst_mom = std::max({worst_mom, rel_dev(a.var_x, b.var_x, sys.hbar),
                                      rel_dev(a.var_p, b.var_p, sys.hbar),
                                      rel_dev(a.cov_xp, b.cov_xp, sys.hbar)});
                const double target = 0.25 * sys.hbar * sys.hbar;
                worst_sat = std::max(
                    worst_sat,
                    std::abs(a.var_x * a.var_p - a.cov_xp * a.cov_xp - target) / target);
            }
        }
        add("moment_agreement", worst_mom, 1e-10);
        add("saturation", worst_sat, 1e-10);
    }
    {  // packet normalization over the horizon
        const GridSpec grid = auto_grid(cfg.sys, init, horizon);
        PhaseTracker tracker = make_phase_tracker(cfg.sys, solve_squeeze(cfg.sys, init));
        double worst = 0.0;
        for (int i = 0; i <= 8; ++i) {
            const WaveField wf =
                evaluate_packet(cfg.sys, init, horizon * i / 8.0, grid, tracker);
            worst = std::max(worst, std::abs(norm(wf) - 1.0));
        }
        add("normalization", worst, cfg.tol.norm_eps);
    }
    {  // grid moments against the analytic ones
        const double t = 0.5 * horizon;
        const GridSpec grid = auto_grid(cfg.sys, init, horizon);
        const MomentSet a = grid_moments(evaluate_packet(cfg.sys, init, t, grid),
                                         cfg.sys.hbar, cfg.tol.norm_eps);
        const MomentSet b = moments(cfg.sys, init, t);
        const double worst = std::max({rel_dev(a.mean_x, b.mean_x, 1.0),
                                       rel_dev(a.mean_p, b.mean_p, 1.0),
                                       rel_dev(a.var_x, b.var_x, cfg.sys.hbar),
                                       rel_dev(a.var_p, b.var_p, cfg.sys.hbar),
                                       rel_dev(a.cov_xp, b.cov_xp, cfg.sys.hbar)});
        add("grid_moments", worst, 1e-6);
    }
    {  // split-step oracle vs analytic packet
        const double t_final = osc ? 2.0 * std::numbers::pi / cfg.sys.omega : cfg.sys.mass;
        const GridSpec grid = auto_grid(cfg.sys, init, t_final);
        const WaveField wf0 = evaluate_packet(cfg.sys, init, 0.0, grid);
        // x4 steps keeps the Strang error well below the default tolerance
        const int steps = 4 * default_steps(cfg.sys, init, t_final);
        const WaveField evolved = split_step_evolve(cfg.sys, wf0, {t_final, steps, false});
        const WaveField analytic = evaluate_packet(cfg.sys, init, t_final, grid);
        const ComparisonReport rep = compare(analytic, evolved);
        add("oracle_l2", osc ? rep.phase_aligned_l2 : rep.l2_error, cfg.tol.oracle_l2_eps);
    }
    {  // Schroedinger residual of the analytic packet
        const double t = horizon / 3.0;
        const GridSpec grid = auto_grid(cfg.sys, init, horizon);
        add("schroedinger_residual",
            schroedinger_residual(cfg.sys, init, t, grid, 1e-3), 1e-4);
    }
    if (full) {
        {  // Strang order: halving dt must shrink the error ~4x
            const SystemParams sys = oscillator(1.0, 1.0, cfg.sys.hbar);
            const InitialGaussian g =
                validate_initial(sys, {0.0, 0.0, 1.0, cfg.sys.hbar, CorrSign::Minus});
            const double t_final = 2.0;
            const GridSpec grid = auto_grid(sys, g, t_final);
            const WaveField wf0 = evaluate_packet(sys, g, 0.0, grid);
            const WaveField target = evaluate_packet(sys, g, t_final, grid);
            const double e1 =
                compare(target, split_step_evolve(sys, wf0, {t_final, 250, false})).l2_error;
            const double e2 =
                compare(target, split_step_evolve(sys, wf0, {t_final, 500, false})).l2_error;
            const double ratio = e1 / e2;
            add("strang_order", std::abs(ratio - 4.0), 0.8);
        }
        {  // contractive minimum against the grid oracle
            const SystemParams sys = free_mass(1.0, 1.0);
            const InitialGaussian g{0.0, 0.0, 1.0, 1.0, CorrSign::Minus};
            const ContractiveInfo info = contractive_analysis(sys, g);
            const OracleMinimum m =
                oracle_contractive_min(sys, g, info.t_return, 512);
            add("contractive_min", std::abs(m.var_star - info.var_min), 1e-4);
        }
    }
    return checks;
}

}  // namespace detail

inline int cmd_verify(const RunConfig& cfg, bool full, std::ostream& out,
                      std::ostream& err) {
    const std::vector<VerifyCheck> checks = detail::run_verify_checks(cfg, full);
    bool all_pass = true;
    if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : checks) {
            rows.push_back({{"check", c.name},
                            {"pass", c.pass},
                            {"measured", c.measured},
                            {"threshold", c.threshold}});
            all_pass = all_pass && c.pass;
        }
        out << nlohmann::json{{"checks", rows}, {"pass", all_pass}}.dump(2) << '\n';
    } else {
        out << "check,status,measured,threshold\n";
        for (const auto& c : checks) {
            out << c.name << ',' << (c.pass ? "pass" : "FAIL") << ','
                << fmt_num(c.measured, 6) << ',' << fmt_num(c.threshold, 6) << '\n';
            all_pass = all_pass && c.pass;
        }
    }
    if (!all_pass) {
        for (const auto& c : checks)
            if (!c.pass) {
                err << "verify failed: " << c.name << " (measured "
                    << fmt_num(c.measured, 6) << " > threshold "
                    << fmt_num(c.threshold, 6) << ")\n";
                break;
            }
        return 2;
    }
    return 0;
}

// Full argument parser and dispatcher. Precedence: command-line flags
// override config-file values override defaults.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"travelling general Gaussian wave packets as coherent-squeezed states"};
    app.require_subcommand(0, 1);

    std::optional<std::string> opt_system, opt_sign, opt_format, opt_config;
    std::optional<double> opt_mass, opt_omega, opt_hbar;
    std::optional<double> opt_x0, opt_p0, opt_dx0, opt_dp0;
    std::optional<double> opt_xmin, opt_xmax;
    std::optional<int> opt_n, opt_precision;
    bool flag_strict = false, flag_oracle = false;

    app.add_option("--system", opt_system, "system kind: free|osc")
        ->check(CLI::IsMember({"free", "osc"}));
    app.add_option("--mass", opt_mass, "particle mass");
    app.add_option("--omega", opt_omega, "oscillator angular frequency");
    app.add_option("--hbar", opt_hbar, "value of hbar");
    app.add_option("--x0", opt_x0, "initial mean position");
    app.add_option("--p0", opt_p0, "initial mean momentum");
    app.add_option("--dx0", opt_dx0, "initial position spread");
    app.add_option("--dp0", opt_dp0, "initial momentum spread");
    app.add_option("--sign", opt_sign, "correlation sign: +|-")
        ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
    app.add_option("--xmin", opt_xmin, "grid lower bound");
    app.add_option("--xmax", opt_xmax, "grid upper bound (exclusive wrap point)");
    app.add_option("--n", opt_n, "number of grid samples");
    app.add_option("--format", opt_format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--precision", opt_precision, "significant digits (1..17)");
    app.add_flag("--strict", flag_strict, "fail on boundary-amplitude violations");
    app.add_flag("--oracle", flag_oracle, "run the numerical oracle alongside");
    app.add_option("--config", opt_config, "JSON config file");

    auto* sub_params =
        app.add_subcommand("params", "squeeze parameters and t = 0 moments");
    double t0 = 0.0, t1 = 0.0, t_field = 0.0;
    int steps = 1;
    auto* sub_moments = app.add_subcommand("moments", "moment table over a time range");
    sub_moments->add_option("--t0", t0, "first sample time");
    sub_moments->add_option("--t1", t1, "last sample time");
    sub_moments->add_option("--steps", steps, "number of rows");
    auto* sub_wavefield = app.add_subcommand("wavefield", "sampled wavefunction at time t");
    sub_wavefield->add_option("--t", t_field, "evaluation time");
    auto* sub_contractive =
        app.add_subcommand("contractive", "contractive-state analysis");
    std::string level = "quick";
    auto* sub_verify = app.add_subcommand("verify", "numerical verification suite");
    sub_verify->add_option("--level", level, "quick|full")
        ->check(CLI::IsMember({"quick", "full"}));
    for (auto* sub : {sub_params, sub_moments, sub_wavefield, sub_contractive, sub_verify})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        RunConfig cfg;
        if (opt_config) detail::apply_json_config(cfg, *opt_config);
        if (opt_system) cfg.sys.kind = detail::parse_kind(*opt_system);
        if (opt_mass) cfg.sys.mass = *opt_mass;
        if (opt_omega) {
            cfg.sys.omega = *opt_omega;
            cfg.omega_given = true;
        }
        if (opt_hbar) cfg.sys.hbar = *opt_hbar;
        if (cfg.sys.kind == SystemKind::Oscillator && !cfg.omega_given)
            cfg.sys.omega = 1.0;
        if (opt_x0) cfg.init.x0 = *opt_x0;
        if (opt_p0) cfg.init.p0 = *opt_p0;
        if (opt_dx0) cfg.init.dx0 = *opt_dx0;
        if (opt_dp0) cfg.init.dp0 = *opt_dp0;
        if (opt_sign) cfg.init.corr_sign = detail::parse_sign(*opt_sign);
        if (opt_xmin) cfg.xmin = *opt_xmin;
        if (opt_xmax) cfg.xmax = *opt_xmax;
        if (opt_n) cfg.grid_n = *opt_n;
        if (opt_format) cfg.format = *opt_format;
        if (opt_precision) cfg.precision = *opt_precision;
        cfg.strict = cfg.strict || flag_strict;
        cfg.oracle = cfg.oracle || flag_oracle;

        if (sub_params->parsed()) return cmd_params(cfg, out);
        if (sub_moments->parsed()) return cmd_moments(cfg, t0, t1, steps, out);
        if (sub_wavefield->parsed()) return cmd_wavefield(cfg, t_field, out, err);
        if (sub_contractive->parsed()) return cmd_contractive(cfg, out);
        if (sub_verify->parsed()) return cmd_verify(cfg, level == "full", out, err);
        err << app.help();
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return 2;
    }
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("gwp");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gwp::cli
