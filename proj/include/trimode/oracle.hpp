#pragma once

#include <array>

#include <Eigen/Dense>

#include "trimode/dynamics.hpp"

namespace trimode::oracle {

/// Generator triple as finite Hermitian matrices.  SU(2) representations are
/// exact at dim = 2j+1; the SU(1,1) discrete series is hard-truncated, which
/// breaks the algebra only on the last basis row/column.
struct RepOperators {
    Eigen::MatrixXcd kx;
    Eigen::MatrixXcd ky;
    Eigen::MatrixXcd kz;
};

RepOperators build_rep(AlgebraKind kind, double index, int dim);

Eigen::MatrixXcd hamiltonian_matrix(const RepOperators& ops, const CouplingTriple& c);

double hermiticity_residual(const Eigen::MatrixXcd& m);

/// Max-norm of [K_x, K_y] - i*beta*K_z restricted to the interior block
/// (dropping the last margin_rows rows and columns).
double commutator_residual(const RepOperators& ops, double beta, int margin_rows = 0);

struct Observables {
    std::array<double, 3> first{};   // <K_x>, <K_y>, <K_z>
    std::array<double, 3> second{};  // <K_x^2>, <K_y^2>, <K_z^2>
    double norm = 1.0;               // || U(t) psi ||
};

/// Heisenberg evolution by spectral decomposition: H is diagonalized once,
/// U(t) = V exp(-i Lambda t) V+ is exact at any t, and expectations are
/// evaluated in the evolved state U(t) psi.
class RepEvolution {
  public:
    RepEvolution(AlgebraKind kind, double index, int dim, const CouplingTriple& c,
                 const std::vector<cdouble>& state_coeffs);

    Observables observables(double t) const;

    /// <H> evaluated from the first moments at time t.
    double energy(double t) const;

    /// Evolved generators U(t)+ K U(t) as dense matrices.
    RepOperators evolved_ops(double t) const;

    int dim() const { return static_cast<int>(eigenvalues_.size()); }
    const RepOperators& ops() const { return ops_; }

  private:
    Eigen::VectorXcd evolved_state(double t) const;

    RepOperators ops_;
    CouplingTriple couplings_;
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
    Eigen::VectorXcd psi_eigenbasis_;
};

/// Basis size for representing a state: smallest M with discarded tail
/// probability below tail_tol, doubled as evolution margin for the SU(1,1)
/// families; exactly 2j+1 (margin-free) for Bloch states.
int truncation_dim(const StateSpec& state, double tail_tol, int cap = kCoefficientCap);

struct OracleVariances {
    double vx = 0.0;
    double vy = 0.0;
    double kz = 0.0;
    double trunc_estimate = 0.0;
};

/// End-to-end variance oracle.  SU(1,1) states are evaluated at the
/// truncation dimension and at twice that dimension; trunc_estimate is the
/// largest observable shift under the doubling and must stay below
/// conv_tol * max(1, |observable|).  SU(2) states are exact.
OracleVariances variance_oracle(const Model& model, const StateSpec& state, double t,
                                double tail_tol = 1e-10, double conv_tol = 1e-8);

/// Batched variant reusing one spectral decomposition per dimension.
std::vector<OracleVariances> variance_oracle_grid(const Model& model, const StateSpec& state,
                                                  std::span<const double> t_grid,
                                                  double tail_tol = 1e-10,
                                                  double conv_tol = 1e-8);

/// First moments <K_x>, <K_y>, <K_z> over a grid plus the t = 0 values,
/// for adjoint-flow comparisons.
std::vector<std::array<double, 3>> first_moments_grid(const Model& model,
                                                      const StateSpec& state,
                                                      std::span<const double> t_grid,
                                                      double tail_tol = 1e-10);

/// State coefficients for the rep, truncated/padded to dim and renormalized.
Eigen::VectorXcd state_vector(const StateSpec& state, int dim, double tail_tol);

}  // namespace trimode::oracle
