#pragma once

#include <array>
#include <cstddef>

namespace trimode {

/// Which of the two real forms the generator triple closes on.
/// beta enters the commutator [K_x, K_y] = i*beta*K_z and the invariant
/// bilinear form diag(beta, beta, 1).
enum class AlgebraKind { SU11, SU2 };

constexpr double beta_of(AlgebraKind kind) noexcept {
    return kind == AlgebraKind::SU11 ? -1.0 : +1.0;
}

/// Coupling strengths (alpha1, alpha2, alpha3) of the linear generator
/// Hamiltonian H = alpha1*K_x + alpha2*K_y + alpha3*K_z.  Couplings and
/// time are dimensionless (only products alpha*t enter the dynamics).
struct CouplingTriple {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
};

enum class FrequencyRegime { Trigonometric, Degenerate, Hyperbolic };

/// Structure frequency g of the closed-form solution:
/// g^2 = alpha3^2 + beta*(alpha1^2 + alpha2^2).  g^2 > 0 gives periodic
/// (trigonometric) motion, g^2 < 0 hyperbolic growth.
struct StructureFrequency {
    double g_squared = 0.0;
    double g_abs = 0.0;
    FrequencyRegime regime = FrequencyRegime::Degenerate;
};

StructureFrequency structure_frequency(const CouplingTriple& c, AlgebraKind kind);

/// Regime-uniform building blocks, entire in tau = g^2:
///   c  = cos(sqrt(tau)*t)
///   s1 = sin(sqrt(tau)*t)/sqrt(tau)
///   s2 = sin^2(sqrt(tau)*t/2)/tau
/// For tau < 0 these continue to cosh, sinh/|g|, sinh^2/|tau|; at tau = 0
/// the limits are 1, t, t^2/4.  Evaluated by Taylor series in tau*t^2 near
/// the degenerate point to avoid cancellation.
struct TrigKernels {
    double c = 1.0;
    double s1 = 0.0;
    double s2 = 0.0;
};

TrigKernels trig_kernels(double tau, double t);

/// The nine scalar coefficient functions of the solution matrix at time t.
/// r3 is evaluated with beta fixed to +1 (the K_z row carries no beta)
/// while tau = g^2 keeps the model's beta.
struct CoefficientSet {
    double r1 = 1.0, r2 = 1.0, r3 = 1.0;
    double j_plus = 0.0, j_minus = 0.0;
    double s_plus = 0.0, s_minus = 0.0;
    double v_plus = 0.0, v_minus = 0.0;
    double t = 0.0;
};

CoefficientSet coefficient_set(const CouplingTriple& c, AlgebraKind kind, double t);

/// 3x3 real solution matrix M(t) acting on the generator column
/// (K_x, K_y, K_z): K(t) = M(t) K(0).  Row-major storage.
struct EvolutionMatrix {
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
    double t = 0.0;

    double operator()(std::size_t row, std::size_t col) const {
        return m[3 * row + col];
    }
    double& operator()(std::size_t row, std::size_t col) {
        return m[3 * row + col];
    }
};

EvolutionMatrix evolution_matrix(const CouplingTriple& c, AlgebraKind kind, double t);
EvolutionMatrix evolution_matrix(const CoefficientSet& cs, AlgebraKind kind);

/// Max-norm of M^T eta M - eta with eta = diag(beta, beta, 1).  Exact flows
/// preserve eta, so this measures both algebra bugs and conditioning.
double metric_residual(const EvolutionMatrix& m, AlgebraKind kind);

double determinant(const EvolutionMatrix& m);

/// Apply M(t) to a vector of generator expectation values.
std::array<double, 3> apply_flow(const EvolutionMatrix& m, const std::array<double, 3>& v);

/// Strong-pump limit: with modes 1 and 2 replaced by classical amplitudes
/// |Gamma_j| e^{i phi_j} and phi2 = phi1 + pi/2, the quadratures reduce to
/// single-mode normal-squeezing form.  Each linear quadrature is reported
/// as (amplitude, phase) multiplying A3 e^{-i phi} +- h.c.; L_z collapses
/// to the scalar -2|Gamma1||Gamma2|.
struct StrongPumpReduction {
    double lx_amplitude = 0.0;  // L_x = lx_amplitude * [A3 e^{-i phase} + A3+ e^{i phase}]
    double lx_phase = 0.0;
    double ly_amplitude = 0.0;  // L_y = i * ly_amplitude * [A3 e^{-i phase} - A3+ e^{i phase}]
    double ly_phase = 0.0;
    double lz = 0.0;
};

StrongPumpReduction strong_pump_reduction(double gamma1_abs, double gamma2_abs, double phi1);

}  // namespace trimode
