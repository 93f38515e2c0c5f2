#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "trimode/algebra.hpp"

namespace trimode {

using cdouble = std::complex<double>;

/// Default cap on basis-coefficient sequences; exceeding it raises
/// truncation_error instead of silently spinning.
inline constexpr int kCoefficientCap = 4096;

class truncation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Displacement-type SU(1,1) coherent state |xi; k>, |xi| < 1.
/// k is the Bargmann index of the discrete-series representation.
struct PerelomovState {
    double k = 0.5;
    cdouble xi{0.0, 0.0};
};

/// Lowering-operator eigenstate |z; n>:  K_- |z; n> = z |z; n>.
struct BarutGirardelloState {
    double n = 0.5;
    cdouble z{0.0, 0.0};
};

/// SU(2) (Bloch) coherent state |mu, j>; 2j is a nonnegative integer.
struct BlochState {
    double j = 0.5;
    cdouble mu{0.0, 0.0};
};

/// Phase conventions: the caption angle phi maps to xi = |xi| e^{-i phi}
/// for the displacement state; z and mu are given by their literal modulus
/// and argument (the fig3 presets use mu = |mu| e^{+i phi}).
PerelomovState make_perelomov(double k, double xi_abs, double phi);
BarutGirardelloState make_barut_girardello(double n, double z_abs, double z_arg);
BlochState make_bloch(double j, double mu_abs, double mu_arg);

void validate(const PerelomovState& s);
void validate(const BarutGirardelloState& s);
void validate(const BlochState& s);

/// Number-basis coefficients.  For the SU(1,1) states index m runs 0..M-1;
/// for Bloch states the vector has exactly 2j+1 entries and index i maps to
/// the weight m = i - j.
std::vector<cdouble> pcs_coefficients(const PerelomovState& s, double tail_tol,
                                      int cap = kCoefficientCap);
std::vector<cdouble> bgcs_coefficients(const BarutGirardelloState& s, double tail_tol,
                                       int cap = kCoefficientCap);
std::vector<cdouble> bloch_coefficients(const BlochState& s);

/// First and second moments of the generators in a fixed state.
/// Real entries are real by Hermiticity; <K_-...> follows by conjugation:
/// <K_-> = conj(kp), <K_-^2> = conj(kp2), <K_- K_z> = conj(kzkp).
struct MomentTable {
    double kz = 0.0;    // <K_z>
    double kz2 = 0.0;   // <K_z^2>
    cdouble kp{};       // <K_+>
    cdouble kp2{};      // <K_+^2>
    cdouble kzkp{};     // <K_z K_+>
    double kpkm = 0.0;  // <K_+ K_->
    double kmkp = 0.0;  // <K_- K_+>
};

/// Moments by direct summation over a coefficient sequence using the ladder
/// matrix elements of the discrete representation.  index is the Bargmann
/// index k for SU(1,1) and the spin j for SU(2).
MomentTable moments_series(const std::vector<cdouble>& coeffs, AlgebraKind kind, double index);

/// Closed forms of the same moments, hand-derived from the generating
/// functions of each family; must agree with the series route.
MomentTable moments_closed(const PerelomovState& s);
MomentTable moments_closed(const BarutGirardelloState& s);
MomentTable moments_closed(const BlochState& s);

/// Quadrature variances of K_x, K_y straight from a moment table
/// (independent of the dynamics layer; used for t = 0 cross-checks).
struct StaticVariances {
    double vx = 0.0;
    double vy = 0.0;
};
StaticVariances variances_from_moments(const MomentTable& m);

}  // namespace trimode
