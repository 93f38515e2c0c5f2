#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "trimode/algebra.hpp"

using namespace trimode;

namespace {
const CouplingTriple kFig{0.1, 0.25, 1.0};
}

TEST_CASE("structure frequency classifies regimes") {
    const auto trig = structure_frequency(kFig, AlgebraKind::SU11);
    CHECK(trig.g_squared == doctest::Approx(0.9275).epsilon(1e-14));
    CHECK(trig.regime == FrequencyRegime::Trigonometric);

    const auto hyper = structure_frequency({1.0, 0.0, 0.0}, AlgebraKind::SU11);
    CHECK(hyper.g_squared == doctest::Approx(-1.0));
    CHECK(hyper.regime == FrequencyRegime::Hyperbolic);

    const auto zero_su11 = structure_frequency({0.0, 0.0, 0.0}, AlgebraKind::SU11);
    const auto zero_su2 = structure_frequency({0.0, 0.0, 0.0}, AlgebraKind::SU2);
    CHECK(zero_su11.regime == FrequencyRegime::Degenerate);
    CHECK(zero_su2.regime == FrequencyRegime::Degenerate);
    CHECK(zero_su11.g_abs == 0.0);

    // SU2 never goes hyperbolic.
    const auto su2 = structure_frequency({1.0, 0.0, 0.0}, AlgebraKind::SU2);
    CHECK(su2.regime == FrequencyRegime::Trigonometric);
}

TEST_CASE("trig kernels match the three closed-form anchors") {
    const auto a = trig_kernels(1.0, M_PI);
    CHECK(a.c == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::fabs(a.s1) < 1e-15);
    CHECK(a.s2 == doctest::Approx(1.0).epsilon(1e-14));

    const auto b = trig_kernels(-1.0, 1.0);
    CHECK(b.c == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(b.s1 == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    const double sh = std::sinh(0.5);
    CHECK(b.s2 == doctest::Approx(sh * sh).epsilon(1e-15));

    const auto c = trig_kernels(0.0, 2.0);
    CHECK(c.c == 1.0);
    CHECK(c.s1 == 2.0);
    CHECK(c.s2 == 1.0);
}

TEST_CASE("trig kernels are continuous across tau = 0") {
    for (const double t : {0.3, 1.0, 7.0}) {
        const auto base = trig_kernels(0.0, t);
        for (const double eps : {1e-8, 1e-10, 1e-12}) {
            for (const double sign : {1.0, -1.0}) {
                const auto k = trig_kernels(sign * eps, t);
                CHECK(std::fabs(k.c - base.c) < 2.0 * eps * t * t);
                CHECK(std::fabs(k.s1 - base.s1) < eps * t * t * t);
                CHECK(std::fabs(k.s2 - base.s2) < eps * t * t * t * t);
            }
        }
    }
}

TEST_CASE("coefficient set identity at t = 0 is exact") {
    const auto cs = coefficient_set(kFig, AlgebraKind::SU11, 0.0);
    CHECK(cs.r1 == 1.0);
    CHECK(cs.r2 == 1.0);
    CHECK(cs.r3 == 1.0);
    CHECK(cs.j_plus == 0.0);
    CHECK(cs.j_minus == 0.0);
    CHECK(cs.s_plus == 0.0);
    CHECK(cs.s_minus == 0.0);
    CHECK(cs.v_plus == 0.0);
    CHECK(cs.v_minus == 0.0);
}

TEST_CASE("pure K_z drive rotates the quadratures") {
    const auto cs = coefficient_set({0.0, 0.0, 1.0}, AlgebraKind::SU11, M_PI_2);
    CHECK(std::fabs(cs.r1) < 1e-15);
    CHECK(cs.j_minus == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(cs.r3 == doctest::Approx(1.0).epsilon(1e-15));

    const auto m = evolution_matrix({0.0, 0.0, 1.0}, AlgebraKind::SU11, M_PI_2);
    // K_x(t) = -K_y(0), K_y(t) = K_x(0), K_z conserved.
    CHECK(m(0, 1) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(m(1, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m(2, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(m(0, 0)) < 1e-15);
    CHECK(std::fabs(m(2, 0)) < 1e-15);
    CHECK(std::fabs(m(2, 1)) < 1e-15);
}

TEST_CASE("K_x drive conserves K_x and grows hyperbolically") {
    const auto cs = coefficient_set({1.0, 0.0, 0.0}, AlgebraKind::SU11, 1.0);
    CHECK(cs.r1 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cs.r2 == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
    CHECK(cs.v_plus == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
}

TEST_CASE("r3 is evaluated with beta = +1 while g keeps the model beta") {
    // SU11, alpha3 != 0: with the model beta the diagonal would read
    // cos - 2 a3^2 s2; the K_z row must use the + sign.
    const CouplingTriple c{0.5, 0.0, 1.0};
    const double tau = structure_frequency(c, AlgebraKind::SU11).g_squared;
    const auto k = trig_kernels(tau, 2.0);
    const auto cs = coefficient_set(c, AlgebraKind::SU11, 2.0);
    CHECK(cs.r3 == doctest::Approx(k.c + 2.0 * k.s2).epsilon(1e-14));
    CHECK(cs.r1 == doctest::Approx(k.c - 2.0 * 0.25 * k.s2).epsilon(1e-14));
}

TEST_CASE("evolution matrix is 2pi/g periodic in the trigonometric regime") {
    const double g = std::sqrt(0.9275);
    const auto m = evolution_matrix(kFig, AlgebraKind::SU11, 2.0 * M_PI / g);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            CHECK(std::fabs(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) -
                            expected) < 1e-9);
        }
    }
}

TEST_CASE("metric residual examples") {
    EvolutionMatrix identity;
    CHECK(metric_residual(identity, AlgebraKind::SU11) == 0.0);
    CHECK(metric_residual(identity, AlgebraKind::SU2) == 0.0);

    const auto m = evolution_matrix(kFig, AlgebraKind::SU11, 5.0);
    CHECK(metric_residual(m, AlgebraKind::SU11) <= 1e-12);

    EvolutionMatrix perturbed;
    perturbed(0, 0) = 1.1;
    CHECK(metric_residual(perturbed, AlgebraKind::SU2) ==
          doctest::Approx(0.21).epsilon(1e-12));
}

TEST_CASE("flow preserves the metric and the determinant on a random moderate domain") {
    std::mt19937_64 rng(7u);
    std::uniform_real_distribution<double> coupling(-2.0, 2.0);
    std::uniform_real_distribution<double> time(0.0, 2.0);
    for (int i = 0; i < 300; ++i) {
        const CouplingTriple c{coupling(rng), coupling(rng), coupling(rng)};
        const double t = time(rng);
        const AlgebraKind kind = (i % 2 == 0) ? AlgebraKind::SU11 : AlgebraKind::SU2;
        const auto m = evolution_matrix(c, kind, t);
        CHECK(metric_residual(m, kind) < 1e-11);
        CHECK(std::fabs(determinant(m) - 1.0) < 1e-10);
    }
}

TEST_CASE("metric residual stays at rounding level relative to the matrix scale") {
    std::mt19937_64 rng(11u);
    std::uniform_real_distribution<double> coupling(-2.0, 2.0);
    std::uniform_real_distribution<double> time(0.0, 20.0);
    for (int i = 0; i < 300; ++i) {
        const CouplingTriple c{coupling(rng), coupling(rng), coupling(rng)};
        const auto m = evolution_matrix(c, AlgebraKind::SU11, time(rng));
        double scale = 1.0;
        for (const double e : m.m) scale = std::fmax(scale, std::fabs(e));
        CHECK(metric_residual(m, AlgebraKind::SU11) < 1e-12 * scale * scale);
    }
}

TEST_CASE("finite differences match the equations of motion") {
    // |g| t stays below ~3.5 so the h^2 truncation of the stencil sits well
    // under the asserted bound.
    const double h = 1e-5;
    std::mt19937_64 rng(13u);
    std::uniform_real_distribution<double> coupling(-1.2, 1.2);
    std::uniform_real_distribution<double> time(0.0, 2.0);
    for (int i = 0; i < 60; ++i) {
        const CouplingTriple c{coupling(rng), coupling(rng), coupling(rng)};
        const double t = time(rng);
        const AlgebraKind kind = (i % 2 == 0) ? AlgebraKind::SU11 : AlgebraKind::SU2;
        const double beta = beta_of(kind);
        const auto plus = evolution_matrix(c, kind, t + h);
        const auto minus = evolution_matrix(c, kind, t - h);
        const auto mid = evolution_matrix(c, kind, t);
        const double gen[3][3] = {{0.0, -c.alpha3, beta * c.alpha2},
                                  {c.alpha3, 0.0, -beta * c.alpha1},
                                  {-c.alpha2, c.alpha1, 0.0}};
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t col = 0; col < 3; ++col) {
                const double fd = (plus(r, col) - minus(r, col)) / (2.0 * h);
                double rhs = 0.0;
                for (std::size_t a = 0; a < 3; ++a) rhs += gen[r][a] * mid(a, col);
                CHECK(std::fabs(fd - rhs) < 1e-8);
            }
        }
    }
}

TEST_CASE("strong pump reduction") {
    const auto r = strong_pump_reduction(1.0, 1.0, 0.0);
    CHECK(r.lx_amplitude == -1.0);
    CHECK(r.lx_phase == 0.0);
    CHECK(r.ly_amplitude == 1.0);
    CHECK(r.lz == -2.0);

    const auto off = strong_pump_reduction(1.0, 0.0, 0.3);
    CHECK(off.lx_amplitude == 0.0);
    CHECK(off.lz == 0.0);

    CHECK(strong_pump_reduction(2.0, 3.0, 1.0).lz == -12.0);
    CHECK_THROWS_AS(strong_pump_reduction(-1.0, 1.0, 0.0), std::domain_error);
}
