// Domain types, unit conventions and input validation shared by the whole
// library. Everything works in natural units: inputs are raw numbers and
// hbar defaults to 1. For the free mass the time scale is set by the mass
// through the preferred mode u0(t) = (1 - i t/m)/sqrt(2), so free-mass
// inputs must be supplied in units consistent with that convention.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace gwp {

enum class SystemKind { FreeMass, Oscillator };
enum class CorrSign { Plus, Minus };

// Base of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user input (CLI exit code 1).
struct InputError : Error {
    using Error::Error;
};

// Numerical contract violation (CLI exit code 2).
struct NumericalError : Error {
    using Error::Error;
};

struct UncertaintyViolation : InputError { using InputError::InputError; };
struct NonPositive : InputError { using InputError::InputError; };
struct NotContractive : InputError { using InputError::InputError; };
struct InvalidGrid : InputError { using InputError::InputError; };
struct GridMismatch : InputError { using InputError::InputError; };
struct NotNormalized : InputError { using InputError::InputError; };
struct InconsistentVariances : NumericalError { using NumericalError::NumericalError; };
struct GridTooNarrow : NumericalError { using NumericalError::NumericalError; };
struct BoundaryLeak : NumericalError { using NumericalError::NumericalError; };

// Which system, its mass/frequency and the value of hbar.
// omega is used only when kind == Oscillator.
struct SystemParams {
    SystemKind kind = SystemKind::FreeMass;
    double mass = 1.0;
    double omega = 0.0;
    double hbar = 1.0;
};

inline SystemParams free_mass(double mass = 1.0, double hbar = 1.0) {
    return {SystemKind::FreeMass, mass, 0.0, hbar};
}

inline SystemParams oscillator(double mass, double omega, double hbar = 1.0) {
    return {SystemKind::Oscillator, mass, omega, hbar};
}

// The four parameters of a general Gaussian packet: means x0, p0 and
// standard deviations dx0, dp0, plus the sign of the initial
// position-momentum correlation (the correlation magnitude is fixed by
// dx0*dp0, see delta()).
struct InitialGaussian {
    double x0 = 0.0;
    double p0 = 0.0;
    double dx0 = 1.0;
    double dp0 = 1.0;
    CorrSign corr_sign = CorrSign::Plus;
};

// Numerical tolerances used by validation and the verification checks.
// uncertainty_eps is relative slack on hbar/2 for the product dx0*dp0.
struct Tolerances {
    double uncertainty_eps = 1e-12;
    double wronskian_eps = 1e-12;
    double norm_eps = 1e-8;
    double oracle_l2_eps = 1e-6;
};

inline double sign_factor(CorrSign s) {
    return s == CorrSign::Plus ? 1.0 : -1.0;
}

inline void check_tolerances(const Tolerances& tol) {
    if (!(tol.uncertainty_eps > 0.0) || !(tol.wronskian_eps > 0.0) ||
        !(tol.norm_eps > 0.0) || !(tol.oracle_l2_eps > 0.0))
        throw NonPositive("tolerances must be strictly positive");
}

inline void check_system(const SystemParams& sys) {
    if (!(sys.mass > 0.0))
        throw NonPositive("mass must be positive, got " + std::to_string(sys.mass));
    if (!(sys.hbar > 0.0))
        throw NonPositive("hbar must be positive, got " + std::to_string(sys.hbar));
    if (sys.kind == SystemKind::Oscillator && !(sys.omega > 0.0))
        throw NonPositive("omega must be positive for the oscillator, got " +
                          std::to_string(sys.omega));
}

// Dimensionless deviation from minimum uncertainty,
//   delta = sqrt((2 dx0 dp0 / hbar)^2 - 1).
// Equals 2|cov_xp(0)|/hbar. The square root amplifies rounding near the
// boundary (a 1e-16 product perturbation gives delta ~ 1e-8), so products
// within uncertainty_eps of hbar/2 map to exactly zero, as do tiny
// negative radicands.
inline double delta(const SystemParams& sys, const InitialGaussian& init,
                    const Tolerances& tol = {}) {
    const double half_hbar = 0.5 * sys.hbar;
    const double product = init.dx0 * init.dp0;
    if (std::abs(product - half_hbar) <= tol.uncertainty_eps * half_hbar) return 0.0;
    const double q = product / half_hbar;
    return std::sqrt(std::max(0.0, q * q - 1.0));
}

// Checks positivity and the uncertainty principle dx0*dp0 >= hbar/2 (up to
// uncertainty_eps slack), and canonicalizes corr_sign to Plus when delta
// vanishes. Idempotent.
inline InitialGaussian validate_initial(const SystemParams& sys, InitialGaussian init,
                                        const Tolerances& tol = {}) {
    check_system(sys);
    check_tolerances(tol);
    if (!(init.dx0 > 0.0))
        throw NonPositive("dx0 must be positive, got " + std::to_string(init.dx0));
    if (!(init.dp0 > 0.0))
        throw NonPositive("dp0 must be positive, got " + std::to_string(init.dp0));
    const double half_hbar = 0.5 * sys.hbar;
    if (init.dx0 * init.dp0 < half_hbar * (1.0 - tol.uncertainty_eps))
        throw UncertaintyViolation(
            "uncertainty principle violated: dx0*dp0 = " +
            std::to_string(init.dx0 * init.dp0) + " < hbar/2 = " +
            std::to_string(half_hbar));
    if (delta(sys, init) < 1e-12) init.corr_sign = CorrSign::Plus;
    return init;
}

}  // namespace gwp
