// Bidirectional map between the four initial Gaussian parameters and the
// representation parameters: squeeze parameter r, squeeze angle theta and
// coherent amplitude alpha.
//
// The map is defined through three scaled quantities
//   C = cosh 2r,  A = sinh 2r cos theta,  B = sinh 2r sin theta,
// with, for the free mass,
//   C = (dx0^2 + dp0^2)/hbar,  A = (dx0^2 - dp0^2)/hbar,  B = +-delta,
// and for the oscillator the same with dx0^2 -> m w dx0^2 and
// dp0^2 -> dp0^2/(m w). Valid inputs satisfy C^2 - A^2 - B^2 = 1, which is
// the uncertainty relation in disguise.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gwp/core.hpp"

namespace gwp {

// Squeeze parameter r >= 0 and angle theta in [0, 2pi); theta = 0
// whenever r = 0 (canonical representative). In squeeze-operator form the
// pair corresponds to the complex argument z = e^{i(pi - theta)} r.
struct SqueezeParams {
    double r = 0.0;
    double theta = 0.0;
};

struct CoherentAmplitude {
    std::complex<double> alpha{0.0, 0.0};
};

// Initial second moments reconstructed from (r, theta):
// position variance, momentum variance and symmetrized correlation.
struct GaussianVariances {
    double dx0_sq = 0.0;
    double dp0_sq = 0.0;
    double dxp0 = 0.0;
};

namespace detail {

// (C, A, B) for a validated initial state.
struct SqueezeRhs {
    double c2, a2, b2;
};

inline SqueezeRhs squeeze_rhs(const SystemParams& sys, const InitialGaussian& init) {
    double sx = init.dx0 * init.dx0;
    double sp = init.dp0 * init.dp0;
    if (sys.kind == SystemKind::Oscillator) {
        const double mw = sys.mass * sys.omega;
        sx *= mw;
        sp /= mw;
    }
    return {(sx + sp) / sys.hbar, (sx - sp) / sys.hbar,
            sign_factor(init.corr_sign) * delta(sys, init)};
}

}  // namespace detail

// Solves cosh 2r = C, sinh 2r (cos,sin) theta = (A, B) for a validated
// initial state. r is recovered as asinh(hypot(A, B))/2, which is free of
// the cancellation arccosh(C) suffers near C = 1.
inline SqueezeParams solve_squeeze(const SystemParams& sys, const InitialGaussian& init) {
    const auto [c2, a2, b2] = detail::squeeze_rhs(sys, init);
    if (c2 < 1.0 - 1e-12)
        throw InconsistentVariances("cosh(2r) = " + std::to_string(c2) +
                                    " < 1; variances inconsistent");
    const double r = 0.5 * std::asinh(std::hypot(a2, b2));
    if (r < 1e-14) return {0.0, 0.0};
    double theta = std::atan2(b2, a2);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    if (theta == 0.0) theta = 0.0;  // normalize -0
    return {r, theta};
}

// Exact inverse of solve_squeeze. dxp0 = (hbar/2) sinh(2r) sin(theta); its
// sign is carried by theta, so no separate correlation sign is needed.
inline GaussianVariances variances_from_squeeze(const SystemParams& sys,
                                                const SqueezeParams& sq) {
    const double c2 = std::cosh(2.0 * sq.r);
    const double s2 = std::sinh(2.0 * sq.r);
    const double a2 = s2 * std::cos(sq.theta);
    const double b2 = s2 * std::sin(sq.theta);
    double sx = 0.5 * sys.hbar * (c2 + a2);
    double sp = 0.5 * sys.hbar * (c2 - a2);
    if (sys.kind == SystemKind::Oscillator) {
        const double mw = sys.mass * sys.omega;
        sx /= mw;
        sp *= mw;
    }
    return {sx, sp, 0.5 * sys.hbar * b2};
}

// Coherent amplitude placing the packet centroid at (x0, p0):
//   alpha = [(cosh r - e^{i theta} sinh r) X + i (cosh r + e^{i theta} sinh r) P]
//           / sqrt(2 hbar),
// with (X, P) = (x0, p0) for the free mass and
// (sqrt(m w) x0, p0/sqrt(m w)) for the oscillator.
inline CoherentAmplitude coherent_alpha(const SystemParams& sys, const SqueezeParams& sq,
                                        double x0, double p0) {
    using namespace std::complex_literals;
    const double ch = std::cosh(sq.r);
    const double sh = std::sinh(sq.r);
    const std::complex<double> eit = std::exp(1i * sq.theta);
    double x = x0;
    double p = p0;
    if (sys.kind == SystemKind::Oscillator) {
        const double root_mw = std::sqrt(sys.mass * sys.omega);
        x *= root_mw;
        p /= root_mw;
    }
    const std::complex<double> alpha =
        ((ch - eit * sh) * x + 1i * (ch + eit * sh) * p) / std::sqrt(2.0 * sys.hbar);
    return {alpha};
}

}  // namespace gwp
