#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "gwp/oracle.hpp"
#include "test_support.hpp"

using namespace gwp;
using Catch::Matchers::WithinAbs;

namespace {

const InitialGaussian kContractive{0, 0, 1.0, 1.0, CorrSign::Minus};

}  // namespace

TEST_CASE("split-step free-mass evolution matches the analytic packet", "[oracle]") {
    const SystemParams sys = free_mass();
    const GridSpec grid = auto_grid(sys, kContractive, 1.0);
    const WaveField wf0 = evaluate_packet(sys, kContractive, 0.0, grid);
    const WaveField evolved =
        split_step_evolve(sys, wf0, {1.0, default_steps(sys, kContractive, 1.0), false});
    const WaveField analytic = evaluate_packet(sys, kContractive, 1.0, grid);
    const ComparisonReport rep = compare(analytic, evolved);
    CHECK(rep.l2_error < 1e-6);
    CHECK(std::abs(rep.norm_drift) < 1e-12);
}

TEST_CASE("coherent oscillator state returns after one period", "[oracle]") {
    const SystemParams sys = oscillator(1.0, 1.0);
    const double s = std::sqrt(0.5);
    const InitialGaussian init{1.0, 0.0, s, s, CorrSign::Plus};
    const GridSpec grid = auto_grid(sys, init, 2.0 * std::numbers::pi);
    const WaveField wf0 = evaluate_packet(sys, init, 0.0, grid);
    WaveField evolved = split_step_evolve(sys, wf0, {2.0 * std::numbers::pi, 6000, false});
    evolved.t = 0.0;  // compare against the initial field up to a global phase
    const ComparisonReport rep = compare(wf0, evolved);
    CHECK(rep.phase_aligned_l2 < 1e-5);
    CHECK(rep.phase_aligned_l2 <= rep.l2_error);
}

TEST_CASE("kinetic-only splitting is step-count independent", "[oracle]") {
    const SystemParams sys = free_mass();
    const GridSpec grid = auto_grid(sys, kContractive, 1.0);
    const WaveField wf0 = evaluate_packet(sys, kContractive, 0.0, grid);
    const WaveField one = split_step_evolve(sys, wf0, {1.0, 1, false});
    const WaveField thousand = split_step_evolve(sys, wf0, {1.0, 1000, false});
    CHECK(compare(one, thousand).l2_error < 1e-12);
}

TEST_CASE("compare distances and the global-phase identity", "[oracle]") {
    using namespace std::complex_literals;
    const SystemParams sys = free_mass();
    const GridSpec grid = auto_grid(sys, kContractive, 0.0);
    const WaveField a = evaluate_packet(sys, kContractive, 0.0, grid);

    const ComparisonReport self = compare(a, a);
    CHECK(self.l2_error == 0.0);
    CHECK(self.max_error == 0.0);
    CHECK(self.phase_aligned_l2 == 0.0);
    CHECK(self.norm_drift == 0.0);

    const double phi = 0.8;
    WaveField b = a;
    for (auto& v : b.values) v *= std::exp(1i * phi);
    const ComparisonReport rep = compare(a, b);
    const double expected = 2.0 * std::abs(std::sin(0.5 * phi)) * norm(a);
    CHECK_THAT(rep.l2_error, WithinAbs(expected, 1e-12));
    CHECK_THAT(rep.phase_aligned_l2, WithinAbs(0.0, 1e-7));
}

TEST_CASE("split_step_evolve validates its arguments", "[oracle]") {
    const SystemParams sys = free_mass();
    const WaveField wf = evaluate_packet(sys, kContractive, 0.0, GridSpec{-10, 10, 256});
    CHECK_THROWS_AS(split_step_evolve(sys, wf, {1.0, 0, false}), InvalidGrid);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(split_step_evolve(sys, wf, {inf, 10, false}), InvalidGrid);
}

TEST_CASE("compare rejects mismatched fields", "[oracle]") {
    const SystemParams sys = free_mass();
    const WaveField a =
        evaluate_packet(sys, kContractive, 0.0, GridSpec{-10.0, 10.0, 256});
    const WaveField b =
        evaluate_packet(sys, kContractive, 0.0, GridSpec{-10.0, 10.0, 512});
    CHECK_THROWS_AS(compare(a, b), GridMismatch);
    WaveField c = a;
    c.t = 1.0;
    CHECK_THROWS_AS(compare(a, c), GridMismatch);
}

TEST_CASE("norm is preserved through long runs", "[oracle]") {
    const SystemParams free_sys = free_mass();
    const GridSpec fg = auto_grid(free_sys, kContractive, 2.0);
    const WaveField f0 = evaluate_packet(free_sys, kContractive, 0.0, fg);
    const WaveField f1 = split_step_evolve(free_sys, f0, {2.0, 400, false});
    CHECK(std::abs(norm(f1) - norm(f0)) < 1e-12);

    const SystemParams osc_sys = oscillator(1.0, 1.0);
    const InitialGaussian osc_init{0.5, 0.5, 1.0, 1.0, CorrSign::Plus};
    const GridSpec og = auto_grid(osc_sys, osc_init, 3.0);
    const WaveField o0 = evaluate_packet(osc_sys, osc_init, 0.0, og);
    const WaveField o1 = split_step_evolve(osc_sys, o0, {3.0, 1000, false});
    CHECK(std::abs(norm(o1) - norm(o0)) < 1e-10);
}

TEST_CASE("Strang error shrinks fourfold when the step is halved", "[oracle]") {
    const SystemParams sys = oscillator(1.0, 1.0);
    const InitialGaussian init{0, 0, 1.0, 1.0, CorrSign::Minus};
    const double t_final = 2.0;
    const GridSpec grid = auto_grid(sys, init, t_final);
    const WaveField wf0 = evaluate_packet(sys, init, 0.0, grid);
    const WaveField target = evaluate_packet(sys, init, t_final, grid);
    const auto error_at = [&](int steps) {
        return compare(target, split_step_evolve(sys, wf0, {t_final, steps, false}))
            .l2_error;
    };
    const double e1 = error_at(250);
    const double e2 = error_at(500);
    CHECK(e1 / e2 > 3.2);
    CHECK(e1 / e2 < 4.8);
}

TEST_CASE("oracle agrees with the analytic packet on random inputs", "[oracle]") {
    gwp::test::CaseGen gen(424242);
    for (int c = 0; c < 4; ++c) {
        const bool osc = c % 2 == 1;
        const auto [sys, init] = gen.valid_case(osc);
        const double t_final = osc ? 2.0 * std::numbers::pi / sys.omega
                                   : gen.uniform(0.5, 5.0 * sys.mass);
        const GridSpec grid = auto_grid(sys, init, t_final);
        const WaveField wf0 = evaluate_packet(sys, init, 0.0, grid);
        const int steps = std::max(6000, default_steps(sys, init, t_final));
        const WaveField evolved = split_step_evolve(sys, wf0, {t_final, steps, false});
        const WaveField analytic = evaluate_packet(sys, init, t_final, grid);
        CHECK(compare(analytic, evolved).l2_error < 1e-5);
    }
}

TEST_CASE("variance scan finds the contractive minimum", "[oracle]") {
    const SystemParams sys = free_mass();
    const ContractiveInfo info = contractive_analysis(sys, kContractive);
    const int samples = 512;
    const double t_max = 2.0 * info.tau;
    const OracleMinimum m = oracle_contractive_min(sys, kContractive, t_max, samples);
    CHECK_THAT(m.var_star, WithinAbs(info.var_min, 1e-4));
    CHECK_THAT(m.t_star, WithinAbs(info.tau, 1.5 * t_max / samples));
}

TEST_CASE("variance scan with a positive correlation never dips", "[oracle]") {
    const SystemParams sys = free_mass();
    const InitialGaussian init{0, 0, 1.0, 1.0, CorrSign::Plus};
    const OracleMinimum m = oracle_contractive_min(sys, init, 1.0, 64);
    CHECK(m.t_star == 0.0);
    CHECK_THAT(m.var_star, WithinAbs(1.0, 1e-6));
}

TEST_CASE("variance scan is free-mass only", "[oracle]") {
    CHECK_THROWS_AS(
        oracle_contractive_min(oscillator(1.0, 1.0), kContractive, 1.0, 16),
        NotContractive);
}

TEST_CASE("strict evolution detects boundary leakage", "[oracle]") {
    const SystemParams sys = free_mass();
    const InitialGaussian fast{0.0, 6.0, 1.0, 0.5, CorrSign::Plus};
    // grid sized for t <= 0.5 only; by t = 4 the centroid has left it
    const GridSpec grid = auto_grid(sys, fast, 0.5);
    const WaveField wf0 = evaluate_packet(sys, fast, 0.0, grid);
    CHECK_THROWS_AS(split_step_evolve(sys, wf0, {4.0, 400, true}), BoundaryLeak);
    const WaveField lax = split_step_evolve(sys, wf0, {4.0, 400, false});
    CHECK_FALSE(lax.boundary_ok);
}

TEST_CASE("analytic packet solves the Schroedinger equation", "[oracle]") {
    const SystemParams free_sys = free_mass();
    const GridSpec fg = auto_grid(free_sys, kContractive, 1.5);
    const double r_free = schroedinger_residual(free_sys, kContractive, 1.0, fg, 1e-3);
    CHECK(r_free < 1e-4);

    const SystemParams osc_sys = oscillator(1.0, 1.0);
    const InitialGaussian osc_init{1.0, -0.5, 1.0, 1.0, CorrSign::Plus};
    const GridSpec og = auto_grid(osc_sys, osc_init, 2.0);
    const double r_osc = schroedinger_residual(osc_sys, osc_init, 1.3, og, 1e-3);
    CHECK(r_osc < 1e-4);

    // central differences are second order: quartering h shrinks it ~16x
    const double r_coarse = schroedinger_residual(osc_sys, osc_init, 1.3, og, 4e-3);
    CHECK(r_coarse / r_osc > 8.0);
    CHECK(r_coarse / r_osc < 32.0);
}
