#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "gwp/modes.hpp"
#include "gwp/squeeze.hpp"
#include "test_support.hpp"

using namespace gwp;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;
// arccosh(2)/2 = ln(2 + sqrt(3))/2
constexpr double kRref = 0.6584789484624083;
}  // namespace

TEST_CASE("solve_squeeze at an equal minimum-uncertainty split gives r = 0", "[squeeze]") {
    // dx0^2 = dp0^2 = 1/2 with hbar = 1: cosh 2r = 1
    const double s = std::sqrt(0.5);
    const SqueezeParams sq = solve_squeeze(free_mass(), {0, 0, s, s, CorrSign::Plus});
    CHECK(sq.r == 0.0);
    CHECK(sq.theta == 0.0);
}

TEST_CASE("solve_squeeze on the correlated unit-variance packet", "[squeeze]") {
    const SqueezeParams plus =
        solve_squeeze(free_mass(), {0, 0, 1.0, 1.0, CorrSign::Plus});
    CHECK_THAT(plus.r, WithinAbs(kRref, 1e-12));
    CHECK_THAT(plus.theta, WithinAbs(kPi / 2.0, 1e-12));

    const SqueezeParams minus =
        solve_squeeze(oscillator(1.0, 1.0), {0, 0, 1.0, 1.0, CorrSign::Minus});
    CHECK_THAT(minus.r, WithinAbs(kRref, 1e-12));
    CHECK_THAT(minus.theta, WithinAbs(3.0 * kPi / 2.0, 1e-12));
}

TEST_CASE("minimum uncertainty with an unequal split still squeezes", "[squeeze]") {
    // free mass, hbar = 1: dx0 = 1, dp0 = 1/2 -> e^r = sqrt(2) dx0, theta = 0
    const SqueezeParams wide = solve_squeeze(free_mass(), {0, 0, 1.0, 0.5, CorrSign::Plus});
    CHECK(wide.r > 0.0);
    CHECK_THAT(wide.r, WithinAbs(0.5 * std::log(2.0), 1e-12));
    CHECK_THAT(wide.theta, WithinAbs(0.0, 1e-12));

    // narrow position spread instead: theta = pi
    const SqueezeParams narrow = solve_squeeze(free_mass(), {0, 0, 0.5, 1.0, CorrSign::Plus});
    CHECK_THAT(narrow.r, WithinAbs(0.5 * std::log(2.0), 1e-12));
    CHECK_THAT(narrow.theta, WithinAbs(kPi, 1e-12));
}

TEST_CASE("consistency identity C^2 - A^2 - B^2 = 1 for validated input", "[squeeze]") {
    gwp::test::CaseGen gen(1234);
    for (int i = 0; i < 200; ++i) {
        const auto [sys, init] = gen.valid_case(gen.coin());
        double sx = init.dx0 * init.dx0;
        double sp = init.dp0 * init.dp0;
        if (sys.kind == SystemKind::Oscillator) {
            sx *= sys.mass * sys.omega;
            sp /= sys.mass * sys.omega;
        }
        const double c = (sx + sp) / sys.hbar;
        const double a = (sx - sp) / sys.hbar;
        const double b = sign_factor(init.corr_sign) * delta(sys, init);
        CHECK_THAT(c * c - a * a - b * b, WithinAbs(1.0, 1e-10 * c * c));
        // and the solved parameters reproduce C
        const SqueezeParams sq = solve_squeeze(sys, init);
        CHECK(gwp::test::close_rel(std::cosh(2.0 * sq.r), c, 1e-12));
    }
}

TEST_CASE("solve_squeeze flags impossible variances", "[squeeze]") {
    // unvalidated sub-Heisenberg input drives cosh(2r) below 1
    CHECK_THROWS_AS(solve_squeeze(free_mass(), {0, 0, 0.1, 0.1, CorrSign::Plus}),
                    InconsistentVariances);
}

TEST_CASE("variances_from_squeeze ground states and inverses", "[squeeze]") {
    const GaussianVariances fm = variances_from_squeeze(free_mass(), {0.0, 0.0});
    CHECK_THAT(fm.dx0_sq, WithinAbs(0.5, 1e-15));
    CHECK_THAT(fm.dp0_sq, WithinAbs(0.5, 1e-15));
    CHECK_THAT(fm.dxp0, WithinAbs(0.0, 1e-15));

    const GaussianVariances os = variances_from_squeeze(oscillator(2.0, 3.0), {0.0, 0.0});
    CHECK_THAT(os.dx0_sq, WithinAbs(1.0 / 12.0, 1e-15));
    CHECK_THAT(os.dp0_sq, WithinAbs(3.0, 1e-14));

    // r = 0.65847..., theta = pi/2 undoes the unit-variance example
    const GaussianVariances inv = variances_from_squeeze(free_mass(), {kRref, kPi / 2.0});
    CHECK_THAT(inv.dx0_sq, WithinAbs(1.0, 1e-12));
    CHECK_THAT(inv.dp0_sq, WithinAbs(1.0, 1e-12));
    CHECK_THAT(inv.dxp0, WithinAbs(std::sqrt(3.0) / 2.0, 1e-12));

    // r = 1, theta = 0 oscillator: (e^2/2, e^-2/2, 0)
    const GaussianVariances sq1 = variances_from_squeeze(oscillator(1.0, 1.0), {1.0, 0.0});
    CHECK_THAT(sq1.dx0_sq, WithinAbs(std::exp(2.0) / 2.0, 1e-14));
    CHECK_THAT(sq1.dp0_sq, WithinAbs(std::exp(-2.0) / 2.0, 1e-15));
    CHECK_THAT(sq1.dxp0, WithinAbs(0.0, 1e-15));
}

TEST_CASE("squeeze parameters round-trip the initial variances", "[squeeze]") {
    gwp::test::CaseGen gen(2024);
    for (int i = 0; i < 200; ++i) {
        const auto [sys, init] = gen.valid_case(gen.coin());
        const SqueezeParams sq = solve_squeeze(sys, init);
        const GaussianVariances v = variances_from_squeeze(sys, sq);
        const double d = delta(sys, init);
        const double expected_corr = sign_factor(init.corr_sign) * 0.5 * sys.hbar * d;
        CHECK(gwp::test::close_rel(v.dx0_sq, init.dx0 * init.dx0, 1e-10));
        CHECK(gwp::test::close_rel(v.dp0_sq, init.dp0 * init.dp0, 1e-10));
        CHECK(gwp::test::close_rel(v.dxp0, expected_corr, 1e-10, 0.5 * sys.hbar));
    }
}

TEST_CASE("coherent amplitude at specific points", "[squeeze]") {
    const CoherentAmplitude zero = coherent_alpha(free_mass(), {0.7, 1.2}, 0.0, 0.0);
    CHECK(std::abs(zero.alpha) == 0.0);

    // r = 0, free mass, hbar = 1, (x0, p0) = (1, 2): alpha = (1 + 2i)/sqrt(2)
    const CoherentAmplitude fm = coherent_alpha(free_mass(), {0.0, 0.0}, 1.0, 2.0);
    CHECK_THAT(fm.alpha.real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(fm.alpha.imag(), WithinAbs(2.0 / std::sqrt(2.0), 1e-15));

    const CoherentAmplitude os = coherent_alpha(oscillator(1.0, 1.0), {0.0, 0.0}, 1.0, 0.0);
    CHECK_THAT(os.alpha.real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
    CHECK_THAT(os.alpha.imag(), WithinAbs(0.0, 1e-15));
}

TEST_CASE("mode-space means reproduce x0 and p0", "[squeeze]") {
    gwp::test::CaseGen gen(31415);
    for (int i = 0; i < 100; ++i) {
        const auto [sys, init] = gen.valid_case(gen.coin());
        const SqueezeParams sq = solve_squeeze(sys, init);
        const CoherentAmplitude ca = coherent_alpha(sys, sq, init.x0, init.p0);
        const ModeValue mv = general_mode(sys, sq, 0.0);
        const double root_hbar = std::sqrt(sys.hbar);
        const double mean_x = root_hbar * 2.0 * (mv.u * ca.alpha).real();
        const double mean_p = root_hbar * sys.mass * 2.0 * (mv.udot * ca.alpha).real();
        CHECK(gwp::test::close_rel(mean_x, init.x0, 1e-10));
        CHECK(gwp::test::close_rel(mean_p, init.p0, 1e-10));
    }
}
