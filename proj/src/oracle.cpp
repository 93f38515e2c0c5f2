#include "trimode/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trimode::oracle {

namespace {

constexpr cdouble kI{0.0, 1.0};

int bloch_dim(const BlochState& s) {
    return static_cast<int>(std::llround(2.0 * s.j)) + 1;
}

std::vector<cdouble> raw_coefficients(const StateSpec& state, double tail_tol) {
    switch (state.family) {
        case StateSpec::Family::Perelomov:
            return pcs_coefficients(state.pcs, tail_tol);
        case StateSpec::Family::BarutGirardello:
            return bgcs_coefficients(state.bgcs, tail_tol);
        case StateSpec::Family::Bloch:
            return bloch_coefficients(state.bloch);
    }
    throw std::logic_error("unreachable");
}

double rep_index(const StateSpec& state) {
    switch (state.family) {
        case StateSpec::Family::Perelomov:
            return state.pcs.k;
        case StateSpec::Family::BarutGirardello:
            return state.bgcs.n;
        case StateSpec::Family::Bloch:
            return state.bloch.j;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

RepOperators build_rep(AlgebraKind kind, double index, int dim) {
    if (dim < 2) {
        throw std::domain_error("build_rep: dim must be at least 2");
    }
    if (kind == AlgebraKind::SU11 && !(index > 0.0)) {
        throw std::domain_error("build_rep: Bargmann index must be positive");
    }
    if (kind == AlgebraKind::SU2) {
        const int expected = static_cast<int>(std::llround(2.0 * index)) + 1;
        if (dim != expected) {
            throw std::domain_error("build_rep: SU2 requires dim == 2j+1");
        }
    }

    Eigen::MatrixXcd kp = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd kz = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double m = static_cast<double>(i);
        if (kind == AlgebraKind::SU11) {
            kz(i, i) = m + index;
            if (i + 1 < dim) {
                kp(i + 1, i) = std::sqrt((m + 1.0) * (m + 2.0 * index));
            }
        } else {
            const double w = m - index;  // weight runs -j..j
            kz(i, i) = w;
            if (i + 1 < dim) {
                kp(i + 1, i) = std::sqrt((index - w) * (index + w + 1.0));
            }
        }
    }
    const Eigen::MatrixXcd km = kp.adjoint();

    RepOperators ops;
    ops.kx = 0.5 * (kp + km);
    ops.ky = -0.5 * kI * (kp - km);
    ops.kz = kz;
    return ops;
}

Eigen::MatrixXcd hamiltonian_matrix(const RepOperators& ops, const CouplingTriple& c) {
    return c.alpha1 * ops.kx + c.alpha2 * ops.ky + c.alpha3 * ops.kz;
}

double hermiticity_residual(const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double commutator_residual(const RepOperators& ops, double beta, int margin_rows) {
    const Eigen::MatrixXcd defect =
        ops.kx * ops.ky - ops.ky * ops.kx - kI * beta * ops.kz;
    const Eigen::Index dim = defect.rows();
    const Eigen::Index keep = dim - static_cast<Eigen::Index>(margin_rows);
    if (keep <= 0) {
        throw std::domain_error("commutator_residual: margin removes the whole block");
    }
    return defect.topLeftCorner(keep, keep).cwiseAbs().maxCoeff();
}

Eigen::VectorXcd state_vector(const StateSpec& state, int dim, double tail_tol) {
    const std::vector<cdouble> coeffs = raw_coefficients(state, tail_tol);
    if (state.family == StateSpec::Family::Bloch &&
        static_cast<int>(coeffs.size()) != dim) {
        throw std::domain_error("state_vector: Bloch states need dim == 2j+1");
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    const int n = std::min<int>(dim, static_cast<int>(coeffs.size()));
    for (int i = 0; i < n; ++i) {
        psi(i) = coeffs[static_cast<std::size_t>(i)];
    }
    psi.normalize();
    return psi;
}

RepEvolution::RepEvolution(AlgebraKind kind, double index, int dim, const CouplingTriple& c,
                           const std::vector<cdouble>& state_coeffs)
    : ops_(build_rep(kind, index, dim)), couplings_(c) {
    const Eigen::MatrixXcd h = hamiltonian_matrix(ops_, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("RepEvolution: eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    const int n = std::min<int>(dim, static_cast<int>(state_coeffs.size()));
    for (int i = 0; i < n; ++i) {
        psi(i) = state_coeffs[static_cast<std::size_t>(i)];
    }
    psi.normalize();
    psi_eigenbasis_ = eigenvectors_.adjoint() * psi;
}

Eigen::VectorXcd RepEvolution::evolved_state(double t) const {
    Eigen::VectorXcd phased = psi_eigenbasis_;
    for (Eigen::Index i = 0; i < phased.size(); ++i) {
        phased(i) *= std::exp(-kI * eigenvalues_(i) * t);
    }
    return eigenvectors_ * phased;
}

Observables RepEvolution::observables(double t) const {
    const Eigen::VectorXcd psi = evolved_state(t);
    Observables obs;
    obs.norm = psi.norm();
    const Eigen::MatrixXcd* ops[3] = {&ops_.kx, &ops_.ky, &ops_.kz};
    for (int i = 0; i < 3; ++i) {
        const Eigen::VectorXcd kpsi = (*ops[i]) * psi;
        obs.first[static_cast<std::size_t>(i)] = psi.dot(kpsi).real();
        obs.second[static_cast<std::size_t>(i)] = kpsi.squaredNorm();
    }
    return obs;
}

double RepEvolution::energy(double t) const {
    const Observables obs = observables(t);
    return couplings_.alpha1 * obs.first[0] + couplings_.alpha2 * obs.first[1] +
           couplings_.alpha3 * obs.first[2];
}

RepOperators RepEvolution::evolved_ops(double t) const {
    Eigen::VectorXcd phases(eigenvalues_.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::exp(-kI * eigenvalues_(i) * t);
    }
    const Eigen::MatrixXcd u = eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
    RepOperators evolved;
    evolved.kx = u.adjoint() * ops_.kx * u;
    evolved.ky = u.adjoint() * ops_.ky * u;
    evolved.kz = u.adjoint() * ops_.kz * u;
    return evolved;
}

int truncation_dim(const StateSpec& state, double tail_tol, int cap) {
    if (state.family == StateSpec::Family::Bloch) {
        return bloch_dim(state.bloch);
    }
    const std::vector<cdouble> coeffs = raw_coefficients(state, tail_tol);
    const int doubled = 2 * static_cast<int>(coeffs.size());
    const int dim = std::max(doubled, 4);
    if (dim > cap) {
        throw truncation_error("truncation_dim: basis cap exceeded");
    }
    return dim;
}

namespace {

OracleVariances observables_to_variances(const Observables& obs) {
    OracleVariances v;
    v.vx = obs.second[0] - obs.first[0] * obs.first[0];
    v.vy = obs.second[1] - obs.first[1] * obs.first[1];
    v.kz = obs.first[2];
    return v;
}

}  // namespace

std::vector<OracleVariances> variance_oracle_grid(const Model& model, const StateSpec& state,
                                                  std::span<const double> t_grid,
                                                  double tail_tol, double conv_tol) {
    check_compatible(model, state);
    const double index = rep_index(state);
    const std::vector<cdouble> coeffs = raw_coefficients(state, tail_tol);

    std::vector<OracleVariances> out;
    out.reserve(t_grid.size());

    if (state.family == StateSpec::Family::Bloch) {
        const RepEvolution exact(model.kind, index, truncation_dim(state, tail_tol),
                                 model.couplings, coeffs);
        for (const double t : t_grid) {
            OracleVariances v = observables_to_variances(exact.observables(t));
            v.trunc_estimate = 0.0;
            out.push_back(v);
        }
        return out;
    }

    // The state-based size covers the initial occupation; the evolution can
    // spread well past it, so escalate until the doubling certificate holds
    // over the whole grid (or the cap is reached).
    for (int dim = truncation_dim(state, tail_tol); 2 * dim <= kCoefficientCap; dim *= 2) {
        const RepEvolution base(model.kind, index, dim, model.couplings, coeffs);
        const RepEvolution doubled(model.kind, index, 2 * dim, model.couplings, coeffs);
        out.clear();
        bool converged = true;
        for (const double t : t_grid) {
            const OracleVariances a = observables_to_variances(base.observables(t));
            const OracleVariances b = observables_to_variances(doubled.observables(t));
            OracleVariances v = b;  // keep the better-converged values
            v.trunc_estimate =
                std::fmax(std::fabs(a.vx - b.vx),
                          std::fmax(std::fabs(a.vy - b.vy), std::fabs(a.kz - b.kz)));
            const double scale = std::fmax(
                1.0, std::fmax(std::fabs(b.vx), std::fmax(std::fabs(b.vy), std::fabs(b.kz))));
            if (v.trunc_estimate > conv_tol * scale) {
                converged = false;
                break;
            }
            out.push_back(v);
        }
        if (converged) return out;
    }
    throw truncation_error("variance_oracle: doubling certificate failed at the dimension cap");
}

OracleVariances variance_oracle(const Model& model, const StateSpec& state, double t,
                                double tail_tol, double conv_tol) {
    const std::array<double, 1> grid{t};
    return variance_oracle_grid(model, state, grid, tail_tol, conv_tol).front();
}

std::vector<std::array<double, 3>> first_moments_grid(const Model& model,
                                                      const StateSpec& state,
                                                      std::span<const double> t_grid,
                                                      double tail_tol) {
    check_compatible(model, state);
    const double index = rep_index(state);
    const std::vector<cdouble> coeffs = raw_coefficients(state, tail_tol);
    const int dim = truncation_dim(state, tail_tol);
    const RepEvolution rep(model.kind, index, dim, model.couplings, coeffs);

    std::vector<std::array<double, 3>> out;
    out.reserve(t_grid.size());
    for (const double t : t_grid) {
        out.push_back(rep.observables(t).first);
    }
    return out;
}

}  // namespace trimode::oracle
