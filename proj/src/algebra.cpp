#include "trimode/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace trimode {

namespace {

// Degenerate-regime guard for the kernels: below this value of |g^2 * t^2|
// the truncated Taylor series is more accurate than the closed forms.
constexpr double kSeriesThreshold = 1e-4;

// Relative floor under which g^2 is classified as degenerate.
constexpr double kRegimeEps = 1e-12;

}  // namespace

StructureFrequency structure_frequency(const CouplingTriple& c, AlgebraKind kind) {
    if (!std::isfinite(c.alpha1) || !std::isfinite(c.alpha2) || !std::isfinite(c.alpha3)) {
        throw std::domain_error("structure_frequency: couplings must be finite");
    }
    const double beta = beta_of(kind);
    const double g2 = c.alpha3 * c.alpha3 + beta * (c.alpha1 * c.alpha1 + c.alpha2 * c.alpha2);
    const double scale = c.alpha1 * c.alpha1 + c.alpha2 * c.alpha2 + c.alpha3 * c.alpha3;

    StructureFrequency out;
    out.g_squared = g2;
    out.g_abs = std::sqrt(std::fabs(g2));
    if (std::fabs(g2) <= kRegimeEps * std::fmax(1.0, scale)) {
        out.regime = FrequencyRegime::Degenerate;
        out.g_abs = (g2 == 0.0) ? 0.0 : out.g_abs;
    } else {
        out.regime = g2 > 0.0 ? FrequencyRegime::Trigonometric : FrequencyRegime::Hyperbolic;
    }
    return out;
}

TrigKernels trig_kernels(double tau, double t) {
    if (!std::isfinite(tau) || !std::isfinite(t)) {
        throw std::domain_error("trig_kernels: arguments must be finite");
    }
    TrigKernels k;
    const double u = tau * t * t;
    if (std::fabs(u) < kSeriesThreshold) {
        // Taylor series in u = tau*t^2 through u^4; with |u| < 1e-4 the first
        // omitted term is below 1e-22 relative.
        const double u2 = u * u;
        const double u3 = u2 * u;
        const double u4 = u2 * u2;
        k.c = 1.0 - u / 2.0 + u2 / 24.0 - u3 / 720.0 + u4 / 40320.0;
        k.s1 = t * (1.0 - u / 6.0 + u2 / 120.0 - u3 / 5040.0 + u4 / 362880.0);
        k.s2 = 0.25 * t * t *
               (1.0 - u / 12.0 + u2 / 360.0 - u3 / 20160.0 + u4 / 1814400.0);
        return k;
    }
    if (tau > 0.0) {
        const double g = std::sqrt(tau);
        const double half = std::sin(0.5 * g * t);
        k.c = std::cos(g * t);
        k.s1 = std::sin(g * t) / g;
        k.s2 = half * half / tau;
    } else {
        const double g = std::sqrt(-tau);
        const double half = std::sinh(0.5 * g * t);
        k.c = std::cosh(g * t);
        k.s1 = std::sinh(g * t) / g;
        k.s2 = half * half / (-tau);
    }
    return k;
}

CoefficientSet coefficient_set(const CouplingTriple& c, AlgebraKind kind, double t) {
    const double beta = beta_of(kind);
    const double tau = structure_frequency(c, kind).g_squared;
    const TrigKernels k = trig_kernels(tau, t);

    const double a1 = c.alpha1, a2 = c.alpha2, a3 = c.alpha3;
    CoefficientSet cs;
    cs.t = t;
    cs.r1 = k.c + 2.0 * beta * a1 * a1 * k.s2;
    cs.r2 = k.c + 2.0 * beta * a2 * a2 * k.s2;
    cs.r3 = k.c + 2.0 * a3 * a3 * k.s2;  // beta fixed to +1 in the K_z row
    cs.j_plus = 2.0 * beta * a1 * a2 * k.s2 + a3 * k.s1;
    cs.j_minus = 2.0 * beta * a1 * a2 * k.s2 - a3 * k.s1;
    cs.s_plus = 2.0 * a1 * a3 * k.s2 + a2 * k.s1;
    cs.s_minus = 2.0 * a1 * a3 * k.s2 - a2 * k.s1;
    cs.v_plus = 2.0 * a2 * a3 * k.s2 + a1 * k.s1;
    cs.v_minus = 2.0 * a2 * a3 * k.s2 - a1 * k.s1;
    return cs;
}

EvolutionMatrix evolution_matrix(const CoefficientSet& cs, AlgebraKind kind) {
    const double beta = beta_of(kind);
    EvolutionMatrix em;
    em.t = cs.t;
    em.m = {cs.r1,      cs.j_minus, beta * cs.s_plus,
            cs.j_plus,  cs.r2,      beta * cs.v_minus,
            cs.s_minus, cs.v_plus,  cs.r3};
    return em;
}

EvolutionMatrix evolution_matrix(const CouplingTriple& c, AlgebraKind kind, double t) {
    return evolution_matrix(coefficient_set(c, kind, t), kind);
}

double metric_residual(const EvolutionMatrix& m, AlgebraKind kind) {
    const double beta = beta_of(kind);
    const double eta[3] = {beta, beta, 1.0};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int a = 0; a < 3; ++a) {
                s += eta[a] * m(a, i) * m(a, j);
            }
            const double target = (i == j) ? eta[i] : 0.0;
            worst = std::fmax(worst, std::fabs(s - target));
        }
    }
    return worst;
}

double determinant(const EvolutionMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::array<double, 3> apply_flow(const EvolutionMatrix& m, const std::array<double, 3>& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1] + m(0, 2) * v[2],
            m(1, 0) * v[0] + m(1, 1) * v[1] + m(1, 2) * v[2],
            m(2, 0) * v[0] + m(2, 1) * v[1] + m(2, 2) * v[2]};
}

StrongPumpReduction strong_pump_reduction(double gamma1_abs, double gamma2_abs, double phi1) {
    if (gamma1_abs < 0.0 || gamma2_abs < 0.0) {
        throw std::domain_error("strong_pump_reduction: amplitudes must be nonnegative");
    }
    StrongPumpReduction r;
    r.lx_amplitude = -gamma2_abs;
    r.lx_phase = phi1;
    r.ly_amplitude = gamma1_abs;
    r.ly_phase = phi1;
    r.lz = -2.0 * gamma1_abs * gamma2_abs;
    return r;
}

}  // namespace trimode
