#pragma once

#include <optional>
#include <span>
#include <vector>

#include "trimode/algebra.hpp"
#include "trimode/coherent_states.hpp"

namespace trimode {

class incompatible_state_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Complex mode-mixing amplitudes entering the evolved quadratures:
///   K_x(t) = f K_+ + f* K_- + (beta S+) K_z   and cyclic partners.
/// At t = 0 they are (1/2, -i/2, 0).
struct MixingAmplitudes {
    cdouble f{0.5, 0.0};
    cdouble g{0.0, -0.5};
    cdouble h{0.0, 0.0};
};

MixingAmplitudes mixing_amplitudes(const CoefficientSet& cs);

/// Quadrature variances and <K_z> at one instant.
struct VarianceTriple {
    double vx = 0.0;
    double vy = 0.0;
    double kz = 0.0;
};

VarianceTriple variances_pcs(const PerelomovState& s, const CouplingTriple& c, double t);
VarianceTriple variances_bgcs(const BarutGirardelloState& s, const CouplingTriple& c, double t);
VarianceTriple variances_bloch(const BlochState& s, const CouplingTriple& c, double t);

/// Normalized variance excess over the linear bound |<K_z>|/2.
/// S < 0 signals squeezing, S = -1 is total squeezing.  Returns nullopt when
/// |<K_z>| is too small for the measure to mean anything.
std::optional<double> squeezing_factor(double variance, double kz);

struct UncertaintyRecord {
    double product = 0.0;
    double bound = 0.0;
    bool satisfied = true;
};

UncertaintyRecord uncertainty_record(double vx, double vy, double kz);

/// One time sample of a sweep.  Undefined squeezing factors are carried as
/// NaN with the matching flag cleared.
struct QuadratureRecord {
    double t = 0.0;
    double vx = 0.0;
    double vy = 0.0;
    double kz = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    double product = 0.0;
    double bound = 0.0;
    bool sx_defined = true;
    bool sy_defined = true;
};

/// Tagged union of the three supported initial states.
struct StateSpec {
    enum class Family { Perelomov, BarutGirardello, Bloch } family = Family::Perelomov;
    PerelomovState pcs{};
    BarutGirardelloState bgcs{};
    BlochState bloch{};

    static StateSpec perelomov(const PerelomovState& s) {
        StateSpec out;
        out.family = Family::Perelomov;
        out.pcs = s;
        return out;
    }
    static StateSpec barut_girardello(const BarutGirardelloState& s) {
        StateSpec out;
        out.family = Family::BarutGirardello;
        out.bgcs = s;
        return out;
    }
    static StateSpec bloch_state(const BlochState& s) {
        StateSpec out;
        out.family = Family::Bloch;
        out.bloch = s;
        return out;
    }
};

struct Model {
    CouplingTriple couplings{};
    AlgebraKind kind = AlgebraKind::SU11;
};

/// Throws incompatible_state_error unless (PCS|BGCS, SU11) or (Bloch, SU2).
void check_compatible(const Model& model, const StateSpec& state);

QuadratureRecord evaluate_sample(const Model& model, const StateSpec& state, double t);

/// Grid sweep.  sweep() parallelizes over samples with OpenMP; samples are
/// independent and written by index, so the output is byte-identical to the
/// serial reference for any thread count.
std::vector<QuadratureRecord> sweep(const Model& model, const StateSpec& state,
                                    std::span<const double> t_grid);
std::vector<QuadratureRecord> sweep_serial(const Model& model, const StateSpec& state,
                                           std::span<const double> t_grid);

std::vector<double> uniform_grid(double t_max, int steps);

}  // namespace trimode
