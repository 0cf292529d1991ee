// Classical trajectory and action, closed-form quantum moments at any time,
// and contractive-state / large-delta analysis.
//
// Moments come in two independent flavours that must agree:
//   moments()             via the mode functions, var_x = hbar |u_r|^2 etc.
//   moments_closed_form() via the explicit (dx0, dp0, delta, sign) formulas.
// Every pure Gaussian state saturates the Robertson-Schroedinger relation,
// var_x var_p - cov_xp^2 = hbar^2/4, at all times.

#pragma once

#include <cmath>
#include <complex>

#include "gwp/core.hpp"
#include "gwp/modes.hpp"
#include "gwp/squeeze.hpp"

namespace gwp {

struct ClassicalState {
    double t = 0.0;
    double x_c = 0.0;
    double p_c = 0.0;
    double s_c = 0.0;  // classical action, s_c(0) = 0
};

struct MomentSet {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double cov_xp = 0.0;  // symmetrized correlation <(x-<x>)(p-<p>)>_sym
};

struct ContractiveInfo {
    double tau = 0.0;       // time of minimum position variance
    double var_min = 0.0;   // exact minimum of var_x
    double t_return = 0.0;  // var_x(t_return) = dx0^2, t_return = 2 tau
};

// Classical motion plus the action integral of the Lagrangian.
// Free mass: x_c = x0 + p0 t/m, s_c = p0^2 t/(2m).
// Oscillator: x_c = x0 cos(wt) + p0 sin(wt)/(m w), p_c = m dx_c/dt, and
// s_c integrates L = (p0^2/2m - m w^2 x0^2/2) cos(2wt) - w x0 p0 sin(2wt).
inline ClassicalState classical_trajectory(const SystemParams& sys, double x0, double p0,
                                           double t) {
    if (sys.kind == SystemKind::FreeMass)
        return {t, x0 + p0 * t / sys.mass, p0, p0 * p0 * t / (2.0 * sys.mass)};
    const double w = sys.omega;
    const double c = std::cos(w * t);
    const double s = std::sin(w * t);
    const double x_c = x0 * c + p0 / (sys.mass * w) * s;
    const double p_c = -sys.mass * w * x0 * s + p0 * c;
    const double k = p0 * p0 / (2.0 * sys.mass) - 0.5 * sys.mass * w * w * x0 * x0;
    const double s_c =
        k * std::sin(2.0 * w * t) / (2.0 * w) + 0.5 * x0 * p0 * (std::cos(2.0 * w * t) - 1.0);
    return {t, x_c, p_c, s_c};
}

namespace detail {

// Second moments from a mode value: var_x = hbar |u|^2,
// var_p = hbar m^2 |udot|^2, cov_xp = hbar m Re(u conj(udot)).
inline void mode_second_moments(const SystemParams& sys, const ModeValue& mv,
                                MomentSet& out) {
    out.var_x = sys.hbar * std::norm(mv.u);
    out.var_p = sys.hbar * sys.mass * sys.mass * std::norm(mv.udot);
    out.cov_xp = sys.hbar * sys.mass * (mv.u * std::conj(mv.udot)).real();
}

inline MomentSet moments_from_squeeze(const SystemParams& sys, const SqueezeParams& sq,
                                      double x0, double p0, double t) {
    const ClassicalState cs = classical_trajectory(sys, x0, p0, t);
    MomentSet out;
    out.mean_x = cs.x_c;
    out.mean_p = cs.p_c;
    mode_second_moments(sys, general_mode(sys, sq, t), out);
    return out;
}

}  // namespace detail

// Moments at time t through the mode-function route.
inline MomentSet moments(const SystemParams& sys, const InitialGaussian& init, double t) {
    return detail::moments_from_squeeze(sys, solve_squeeze(sys, init), init.x0, init.p0, t);
}

// Moments at time t from the explicit initial-data formulas; an independent
// path used to cross-validate moments().
// Free mass:
//   var_x = dx0^2 + s hbar d t/m + dp0^2 t^2/m^2,  var_p = dp0^2,
//   cov   = s hbar d/2 + dp0^2 t/m.
// Oscillator:
//   var_x = dx0^2 cos^2 + (dp0/mw)^2 sin^2 + s hbar d sin(2wt)/(2mw)
//   var_p = dp0^2 cos^2 + (mw dx0)^2 sin^2 - s hbar d m w sin(2wt)/2
//   cov   = s hbar d cos(2wt)/2 - (mw dx0^2 - dp0^2/(mw)) sin(2wt)/2
// where d = delta and s = +-1 from corr_sign.
inline MomentSet moments_closed_form(const SystemParams& sys, const InitialGaussian& init,
                                     double t) {
    const ClassicalState cs = classical_trajectory(sys, init.x0, init.p0, t);
    const double d = delta(sys, init);
    const double s = sign_factor(init.corr_sign);
    const double vx0 = init.dx0 * init.dx0;
    const double vp0 = init.dp0 * init.dp0;
    MomentSet out;
    out.mean_x = cs.x_c;
    out.mean_p = cs.p_c;
    if (sys.kind == SystemKind::FreeMass) {
        const double tm = t / sys.mass;
        out.var_x = vx0 + s * sys.hbar * d * tm + vp0 * tm * tm;
        out.var_p = vp0;
        out.cov_xp = 0.5 * s * sys.hbar * d + vp0 * tm;
        return out;
    }
    const double mw = sys.mass * sys.omega;
    const double c = std::cos(sys.omega * t);
    const double sn = std::sin(sys.omega * t);
    const double s2w = std::sin(2.0 * sys.omega * t);
    const double c2w = std::cos(2.0 * sys.omega * t);
    out.var_x = vx0 * c * c + vp0 / (mw * mw) * sn * sn + s * sys.hbar * d * s2w / (2.0 * mw);
    out.var_p = vp0 * c * c + mw * mw * vx0 * sn * sn - 0.5 * s * sys.hbar * d * mw * s2w;
    out.cov_xp = 0.5 * s * sys.hbar * d * c2w - 0.5 * (mw * vx0 - vp0 / mw) * s2w;
    return out;
}

// Contractive states: free mass with negative correlation and delta > 0.
// var_x(t) = dx0^2 - hbar d t/m + dp0^2 t^2/m^2 first decreases, reaching
// its exact minimum hbar^2/(4 dp0^2) at tau = hbar m d/(2 dp0^2), and is
// back at dx0^2 at t = 2 tau. The minimum also follows from saturation:
// cov_xp(tau) = 0, hence var_x(tau) = hbar^2/(4 var_p).
inline ContractiveInfo contractive_analysis(const SystemParams& sys,
                                            const InitialGaussian& init) {
    if (sys.kind != SystemKind::FreeMass)
        throw NotContractive("contractive analysis is defined for the free mass only");
    if (init.corr_sign != CorrSign::Minus)
        throw NotContractive("contractive states need a negative correlation sign");
    const double d = delta(sys, init);
    if (!(d > 0.0))
        throw NotContractive("minimum-uncertainty packets (delta = 0) are not contractive");
    const double vp0 = init.dp0 * init.dp0;
    const double tau = 0.5 * sys.hbar * sys.mass * d / vp0;
    const double var_min = sys.hbar * sys.hbar / (4.0 * vp0);
    return {tau, var_min, 2.0 * tau};
}

// Large-delta approximation of the position spread Delta x (not variance):
//   free mass:  |dx0 + s (hbar d/(2 dx0)) t/m|
//   oscillator: |dx0 cos(wt) + s (hbar d/(2 m w dx0)) sin(wt)|
inline double approx_variance_large_delta(const SystemParams& sys,
                                          const InitialGaussian& init, double t) {
    const double d = delta(sys, init);
    const double s = sign_factor(init.corr_sign);
    if (sys.kind == SystemKind::FreeMass)
        return std::abs(init.dx0 + s * 0.5 * sys.hbar * d / init.dx0 * t / sys.mass);
    const double w = sys.omega;
    return std::abs(init.dx0 * std::cos(w * t) +
                    s * 0.5 * sys.hbar * d / (sys.mass * w * init.dx0) * std::sin(w * t));
}

}  // namespace gwp
