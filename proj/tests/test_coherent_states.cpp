#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trimode/coherent_states.hpp"

using namespace trimode;

namespace {

double norm_sum(const std::vector<cdouble>& c) {
    double s = 0.0;
    for (const auto& v : c) s += std::norm(v);
    return s;
}

}  // namespace

TEST_CASE("state validation") {
    CHECK_THROWS_AS(make_perelomov(0.0, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_perelomov(0.5, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_barut_girardello(0.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_bloch(0.7, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(make_bloch(0.0, 1.0, 0.0), std::domain_error);
    CHECK_NOTHROW(make_bloch(2.5, 1.0, 0.0));
    CHECK_NOTHROW(make_perelomov(0.25, 0.0, 0.0));  // ground state allowed
}

TEST_CASE("pcs coefficients") {
    const auto ground = pcs_coefficients({0.25, {0.0, 0.0}}, 1e-10);
    REQUIRE(ground.size() == 1);
    CHECK(ground[0] == cdouble{1.0, 0.0});

    const PerelomovState s{0.25, {0.5, 0.0}};
    const auto c = pcs_coefficients(s, 1e-10);
    REQUIRE(c.size() >= 3);
    // |c1|^2 / |c0|^2 = 2k |xi|^2
    CHECK(std::norm(c[1]) / std::norm(c[0]) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(norm_sum(c) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(1.0 - norm_sum(c) < 1e-10);

    // cap explosion: |xi| close to 1 cannot reach the tail budget in 64 modes
    CHECK_THROWS_AS(pcs_coefficients({0.25, {0.999, 0.0}}, 1e-10, 64), truncation_error);
}

TEST_CASE("bgcs coefficients are a K_- eigenvector") {
    const auto ground = bgcs_coefficients({1.5, {0.0, 0.0}}, 1e-10);
    REQUIRE(ground.size() == 1);
    CHECK(ground[0] == cdouble{1.0, 0.0});

    const BarutGirardelloState s{2.0, cdouble{-10.0, 0.0}};  // z = 10 e^{i pi}
    const auto c = bgcs_coefficients(s, 1e-10);
    CHECK(norm_sum(c) == doctest::Approx(1.0).epsilon(1e-9));

    // K_- c reproduces z c componentwise:  c_{m+1} b_{m+1} = z c_m.
    for (std::size_t m = 0; m + 1 < c.size(); ++m) {
        const double md = static_cast<double>(m + 1);
        const double b = std::sqrt(md * (md + 2.0 * s.n - 1.0));
        const cdouble lhs = c[m + 1] * b;
        const cdouble rhs = s.z * c[m];
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::fmax(std::abs(rhs), 1e-12));
    }
}

TEST_CASE("bloch coefficients") {
    const auto lowest = bloch_coefficients({2.0, {0.0, 0.0}});
    REQUIRE(lowest.size() == 5);
    CHECK(lowest[0] == cdouble{1.0, 0.0});
    CHECK(std::abs(lowest[4]) == 0.0);

    const auto half = bloch_coefficients({0.5, {1.0, 0.0}});
    REQUIRE(half.size() == 2);
    CHECK(std::abs(half[0]) == doctest::Approx(M_SQRT1_2).epsilon(1e-14));
    CHECK(std::abs(half[1]) == doctest::Approx(M_SQRT1_2).epsilon(1e-14));

    const auto big = bloch_coefficients({3.0, {100.0, 0.0}});
    REQUIRE(big.size() == 7);
    CHECK(std::norm(big[6]) > 0.999);  // weight concentrates on m = +j

    for (const double mu : {0.3, 1.0, 10.0}) {
        CHECK(norm_sum(bloch_coefficients({2.5, {mu, 0.0}})) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("series moments reproduce closed-form anchors") {
    // PCS: <K_z> = k (1 + |xi|^2)/(1 - |xi|^2)
    {
        const PerelomovState s{0.25, {0.5, 0.0}};
        const auto m = moments_series(pcs_coefficients(s, 1e-12), AlgebraKind::SU11, s.k);
        CHECK(m.kz == doctest::Approx(5.0 / 12.0).epsilon(1e-10));
    }
    // BGCS: <K_-> = z
    {
        const BarutGirardelloState s = make_barut_girardello(1.5, 3.0, 0.8);
        const auto m = moments_series(bgcs_coefficients(s, 1e-13), AlgebraKind::SU11, s.n);
        CHECK(std::abs(std::conj(m.kp) - s.z) < 1e-10);
    }
    // Bloch: <K_z> = 0 at |mu| = 1, -j at mu = 0
    {
        const auto m1 = moments_series(bloch_coefficients({1.0, {0.0, 1.0}}),
                                       AlgebraKind::SU2, 1.0);
        CHECK(std::fabs(m1.kz) < 1e-14);
        const auto m0 = moments_series(bloch_coefficients({1.0, {0.0, 0.0}}),
                                       AlgebraKind::SU2, 1.0);
        CHECK(m0.kz == doctest::Approx(-1.0).epsilon(1e-14));
    }
}

TEST_CASE("closed moments agree with the series on a parameter grid") {
    const auto compare = [](const MomentTable& a, const MomentTable& b) {
        const double tol = 1e-10;
        CHECK(std::fabs(a.kz - b.kz) <= tol * std::fmax(std::fabs(a.kz), 1.0));
        CHECK(std::fabs(a.kz2 - b.kz2) <= tol * std::fmax(std::fabs(a.kz2), 1.0));
        CHECK(std::abs(a.kp - b.kp) <= tol * std::fmax(std::abs(a.kp), 1.0));
        CHECK(std::abs(a.kp2 - b.kp2) <= tol * std::fmax(std::abs(a.kp2), 1.0));
        CHECK(std::abs(a.kzkp - b.kzkp) <= tol * std::fmax(std::abs(a.kzkp), 1.0));
        CHECK(std::fabs(a.kpkm - b.kpkm) <= tol * std::fmax(std::fabs(a.kpkm), 1.0));
        CHECK(std::fabs(a.kmkp - b.kmkp) <= tol * std::fmax(std::fabs(a.kmkp), 1.0));
    };

    for (const double k : {0.25, 1.0}) {
        for (const double xi : {0.1, 0.8}) {
            const PerelomovState s = make_perelomov(k, xi, 1.1);
            compare(moments_closed(s),
                    moments_series(pcs_coefficients(s, 1e-14), AlgebraKind::SU11, k));
        }
    }
    for (const double n : {0.5, 2.0}) {
        for (const double za : {1.0, 10.0}) {
            const BarutGirardelloState s = make_barut_girardello(n, za, 2.2);
            compare(moments_closed(s),
                    moments_series(bgcs_coefficients(s, 1e-14), AlgebraKind::SU11, n));
        }
    }
    for (const double j : {0.5, 5.0}) {
        for (const double mu : {0.5, 10.0}) {
            const BlochState s = make_bloch(j, mu, -0.4);
            compare(moments_closed(s),
                    moments_series(bloch_coefficients(s), AlgebraKind::SU2, j));
        }
    }
}

TEST_CASE("BGCS is a minimum-uncertainty state at t = 0") {
    for (const double n : {0.5, 2.0}) {
        for (const double za : {1.0, 10.0}) {
            const auto m = moments_closed(make_barut_girardello(n, za, 0.6));
            const auto v = variances_from_moments(m);
            const double bound = 0.25 * m.kz * m.kz;
            CHECK(std::fabs(v.vx * v.vy - bound) <= 1e-12 * bound);
        }
    }
}

TEST_CASE("commutator identity in expectation matches the ladder convention") {
    // <K+K-> - <K-K+> = 2 beta <K_z> for the representations in use.
    const auto m_p = moments_closed(make_perelomov(0.75, 0.6, 0.3));
    CHECK(m_p.kpkm - m_p.kmkp == doctest::Approx(-2.0 * m_p.kz).epsilon(1e-12));

    const auto m_b = moments_closed(make_bloch(2.0, 0.7, 0.0));
    CHECK(m_b.kpkm - m_b.kmkp == doctest::Approx(2.0 * m_b.kz).epsilon(1e-12));
}
