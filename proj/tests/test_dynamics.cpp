#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trimode/dynamics.hpp"
#include "trimode/scenario.hpp"

using namespace trimode;

namespace {
const CouplingTriple kFig{0.1, 0.25, 1.0};
const Model kSu11{kFig, AlgebraKind::SU11};
const Model kSu2{kFig, AlgebraKind::SU2};
}  // namespace

TEST_CASE("mixing amplitudes") {
    const auto at_zero = mixing_amplitudes(coefficient_set(kFig, AlgebraKind::SU11, 0.0));
    CHECK(at_zero.f == cdouble{0.5, 0.0});
    CHECK(at_zero.g == cdouble{0.0, -0.5});
    CHECK(at_zero.h == cdouble{0.0, 0.0});

    const auto rot = mixing_amplitudes(coefficient_set({0.0, 0.0, 1.0}, AlgebraKind::SU11, M_PI_2));
    CHECK(std::abs(rot.f - cdouble{0.0, 0.5}) < 1e-15);

    const auto hyp = mixing_amplitudes(coefficient_set({1.0, 0.0, 0.0}, AlgebraKind::SU11, 1.0));
    CHECK(std::abs(hyp.h - cdouble{0.0, -0.5 * std::sinh(1.0)}) < 1e-14);
}

TEST_CASE("PCS variances at t = 0") {
    const double k = 0.3;
    const double xi = 0.5;
    const double x = xi * xi;
    const PerelomovState s{k, cdouble{0.0, -xi}};  // phi = pi/2
    const auto v = variances_pcs(s, kFig, 0.0);
    CHECK(v.vx == doctest::Approx(k / 2.0).epsilon(1e-13));
    CHECK(v.vy == doctest::Approx(2.0 * k * (0.25 + x / ((1.0 - x) * (1.0 - x))))
                      .epsilon(1e-13));
    CHECK(v.kz == doctest::Approx(k * (1.0 + x) / (1.0 - x)).epsilon(1e-13));
}

TEST_CASE("BGCS variances at t = 0 sit exactly on the uncertainty bound") {
    const BarutGirardelloState s{2.0, cdouble{-10.0, 0.0}};
    const auto v = variances_bgcs(s, kFig, 0.0);
    CHECK(v.vx == doctest::Approx(v.vy).epsilon(1e-13));
    CHECK(v.vx * v.vy == doctest::Approx(0.25 * v.kz * v.kz).epsilon(1e-12));
    CHECK(v.kz == doctest::Approx(2.0 * v.vx).epsilon(1e-13));
}

TEST_CASE("Bloch variances at t = 0") {
    const BlochState imagmu{1.5, cdouble{0.0, -0.7}};
    const auto v = variances_bloch(imagmu, kFig, 0.0);
    CHECK(v.vx == doctest::Approx(1.5 / 2.0).epsilon(1e-13));

    const BlochState lowest{2.0, cdouble{0.0, 0.0}};
    CHECK(variances_bloch(lowest, kFig, 0.0).kz == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("squeezing factor") {
    CHECK(*squeezing_factor(0.5, 1.0) == doctest::Approx(0.0));
    CHECK(*squeezing_factor(0.0, 2.0) == doctest::Approx(-1.0));
    CHECK_FALSE(squeezing_factor(1.0, 0.0).has_value());
    CHECK_FALSE(squeezing_factor(1.0, 1e-14).has_value());
    CHECK_THROWS_AS(squeezing_factor(-0.1, 1.0), std::domain_error);

    // PCS phi = pi/2: sx(0) = -2|xi|^2/(1+|xi|^2), independent of k.
    for (const double k : {0.25, 0.75, 1.0, 2.0}) {
        const PerelomovState s{k, cdouble{0.0, -0.5}};
        const auto v = variances_pcs(s, kFig, 0.0);
        CHECK(*squeezing_factor(v.vx, v.kz) == doctest::Approx(-0.4).epsilon(1e-12));
    }
}

TEST_CASE("uncertainty record") {
    const auto tight = uncertainty_record(1.0, 1.0, 2.0);
    CHECK(tight.product == 1.0);
    CHECK(tight.bound == 1.0);
    CHECK(tight.satisfied);

    const auto zero = uncertainty_record(1.0, 1.0, 0.0);
    CHECK(zero.satisfied);
    CHECK(zero.bound == 0.0);

    CHECK_FALSE(uncertainty_record(0.1, 0.1, 2.0).satisfied);
}

TEST_CASE("sweep basics") {
    const StateSpec pcs = StateSpec::perelomov({0.25, cdouble{0.0, -0.5}});

    const std::vector<double> empty;
    CHECK(sweep(kSu11, pcs, empty).empty());

    CHECK_THROWS_AS(sweep(kSu2, pcs, empty), incompatible_state_error);
    const StateSpec bloch = StateSpec::bloch_state({5.0, cdouble{0.0, -0.5}});
    CHECK_THROWS_AS(sweep(kSu11, bloch, empty), incompatible_state_error);

    const auto grid = uniform_grid(10.0, 100);
    const auto records = sweep(kSu11, pcs, grid);
    REQUIRE(records.size() == 101);
    CHECK(records.front().t == 0.0);
    CHECK(records.back().t == 10.0);
    CHECK(records.front().sx == doctest::Approx(-0.4).epsilon(1e-12));
    for (const auto& r : records) {
        CHECK(r.vx >= 0.0);
        CHECK(r.vy >= 0.0);
        CHECK(r.product >= r.bound - 1e-9 * std::fmax(1.0, r.bound));
        if (r.sx_defined) CHECK(r.sx >= -1.0 - 1e-12);
        if (r.sy_defined) CHECK(r.sy >= -1.0 - 1e-12);
    }
}

TEST_CASE("parallel sweep is bitwise identical to the serial reference") {
    const auto grid = uniform_grid(30.0, 4000);
    const StateSpec states[3] = {
        StateSpec::perelomov({0.25, cdouble{0.0, -0.8}}),
        StateSpec::barut_girardello({2.0, cdouble{-10.0, 0.0}}),
        StateSpec::bloch_state({5.0, cdouble{0.0, -0.5}}),
    };
    const Model models[3] = {kSu11, kSu11, kSu2};
    for (int i = 0; i < 3; ++i) {
        const auto a = sweep_serial(models[i], states[i], grid);
        const auto b = sweep(models[i], states[i], grid);
        REQUIRE(a.size() == b.size());
        for (std::size_t s = 0; s < a.size(); ++s) {
            CHECK(a[s].vx == b[s].vx);
            CHECK(a[s].vy == b[s].vy);
            CHECK(a[s].kz == b[s].kz);
            CHECK(a[s].product == b[s].product);
        }
    }
}

TEST_CASE("records repeat after one period in the trigonometric regime") {
    const StateSpec pcs = StateSpec::perelomov({0.25, cdouble{0.0, -0.5}});
    const double g = std::sqrt(0.9275);
    const double period = 4.0 * M_PI / g;
    const auto grid = uniform_grid(period, 128);
    std::vector<double> shifted(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) shifted[i] = grid[i] + period;
    const auto a = sweep(kSu11, pcs, grid);
    const auto b = sweep(kSu11, pcs, shifted);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::fabs(a[i].sx - b[i].sx) < 1e-8);
        CHECK(std::fabs(a[i].sy - b[i].sy) < 1e-8);
    }
}

TEST_CASE("hyperbolic regime loses squeezing permanently") {
    const Model hyper{{1.0, 0.25, 0.1}, AlgebraKind::SU11};
    const StateSpec pcs = StateSpec::perelomov({0.25, cdouble{0.0, -0.5}});
    const auto grid = uniform_grid(20.0, 400);
    const auto records = sweep(hyper, pcs, grid);
    CHECK(records.front().sx < 0.0);
    CHECK(records.back().sx > 0.0);
    double prev = 0.0;
    bool first = true;
    for (const auto& r : records) {
        if (r.t < 5.0) continue;
        if (!first) CHECK(r.vx >= prev);
        prev = r.vx;
        first = false;
    }
}

TEST_CASE("uniform grid endpoints") {
    const auto g = uniform_grid(2.5, 5);
    REQUIRE(g.size() == 6);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 2.5);

    const auto single = uniform_grid(3.0, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 0.0);

    CHECK_THROWS_AS(uniform_grid(-1.0, 5), std::domain_error);
}
