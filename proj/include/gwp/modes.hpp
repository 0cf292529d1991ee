// Complex classical mode functions u(t) and their time derivatives for the
// free mass and the oscillator. All modes returned here satisfy the
// Wronskian condition m (u conj(udot) - udot conj(u)) = i, which normalizes
// the associated ladder operators. Derivatives are analytic, never finite
// differences.

#pragma once

#include <cmath>
#include <complex>

#include "gwp/core.hpp"
#include "gwp/squeeze.hpp"

namespace gwp {

struct ModeValue {
    std::complex<double> u{0.0, 0.0};
    std::complex<double> udot{0.0, 0.0};
};

// Preferred (ground-state) mode:
//   free mass:  u = (1 - i t/m)/sqrt(2),     udot = -i/(m sqrt(2))
//   oscillator: u = e^{-i w t}/sqrt(2 m w),  udot = -i w u
inline ModeValue preferred_mode(const SystemParams& sys, double t) {
    using namespace std::complex_literals;
    if (sys.kind == SystemKind::FreeMass) {
        const double inv_root2 = 1.0 / std::sqrt(2.0);
        return {inv_root2 * (1.0 - 1i * (t / sys.mass)),
                -1i * inv_root2 / sys.mass};
    }
    const std::complex<double> u =
        std::exp(-1i * (sys.omega * t)) / std::sqrt(2.0 * sys.mass * sys.omega);
    return {u, -1i * sys.omega * u};
}

// Two-parameter family of Wronskian-normalized modes,
//   u_r = cosh(r) u0 + e^{-i theta} sinh(r) conj(u0),
// and the same combination for udot. Reduces to preferred_mode at r = 0.
inline ModeValue general_mode(const SystemParams& sys, const SqueezeParams& sq, double t) {
    using namespace std::complex_literals;
    const ModeValue m0 = preferred_mode(sys, t);
    const double ch = std::cosh(sq.r);
    const std::complex<double> f = std::exp(-1i * sq.theta) * std::sinh(sq.r);
    return {ch * m0.u + f * std::conj(m0.u), ch * m0.udot + f * std::conj(m0.udot)};
}

// m (u conj(udot) - udot conj(u)); equals i for any mode produced above.
inline std::complex<double> wronskian(const SystemParams& sys, const ModeValue& mv) {
    return sys.mass * (mv.u * std::conj(mv.udot) - mv.udot * std::conj(mv.u));
}

}  // namespace gwp
