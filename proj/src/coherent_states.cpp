#include "trimode/coherent_states.hpp"

#include <cmath>

#include "trimode/special_functions.hpp"

namespace trimode {

namespace {

bool is_half_integer_spin(double j) {
    const double twoj = 2.0 * j;
    return std::isfinite(j) && twoj >= 1.0 && std::fabs(twoj - std::round(twoj)) < 1e-9;
}

void check_tail_tol(double tail_tol) {
    if (!(tail_tol > 0.0) || tail_tol > 1e-6) {
        throw std::domain_error("tail_tol must lie in (0, 1e-6]");
    }
}

}  // namespace

PerelomovState make_perelomov(double k, double xi_abs, double phi) {
    PerelomovState s{k, std::polar(xi_abs, -phi)};
    validate(s);
    return s;
}

BarutGirardelloState make_barut_girardello(double n, double z_abs, double z_arg) {
    BarutGirardelloState s{n, std::polar(z_abs, z_arg)};
    validate(s);
    return s;
}

BlochState make_bloch(double j, double mu_abs, double mu_arg) {
    BlochState s{j, std::polar(mu_abs, mu_arg)};
    validate(s);
    return s;
}

void validate(const PerelomovState& s) {
    if (!(s.k > 0.0) || !std::isfinite(s.k)) {
        throw std::domain_error("PerelomovState: Bargmann index k must be positive");
    }
    if (!(std::abs(s.xi) < 1.0)) {
        throw std::domain_error("PerelomovState: requires |xi| < 1");
    }
}

void validate(const BarutGirardelloState& s) {
    if (!(s.n > 0.0) || !std::isfinite(s.n)) {
        throw std::domain_error("BarutGirardelloState: index n must be positive");
    }
    if (!std::isfinite(std::abs(s.z))) {
        throw std::domain_error("BarutGirardelloState: z must be finite");
    }
}

void validate(const BlochState& s) {
    if (!is_half_integer_spin(s.j)) {
        throw std::domain_error("BlochState: 2j must be a positive integer");
    }
    if (!std::isfinite(std::abs(s.mu))) {
        throw std::domain_error("BlochState: mu must be finite");
    }
}

std::vector<cdouble> pcs_coefficients(const PerelomovState& s, double tail_tol, int cap) {
    validate(s);
    check_tail_tol(tail_tol);
    const double x = std::norm(s.xi);
    if (x == 0.0) return {cdouble{1.0, 0.0}};

    // |c_m|^2 = (1-x)^{2k} * [Gamma(m+2k)/(m! Gamma(2k))] * x^m ; the weight
    // is assembled in log space, the phase is m*arg(xi).
    const double log_norm = s.k * std::log1p(-x);
    const double phase = std::arg(s.xi);
    const double log_x_abs = std::log(std::abs(s.xi));

    std::vector<cdouble> c;
    c.reserve(64);
    long double cum = 0.0L;
    for (int m = 0; m < cap; ++m) {
        const double md = static_cast<double>(m);
        const double log_w = (m == 0) ? 0.0 : sf::log_binomial(md + 2.0 * s.k - 1.0, md);
        const double log_abs = log_norm + 0.5 * log_w + md * log_x_abs;
        const cdouble cm = std::polar(std::exp(log_abs), md * phase);
        c.push_back(cm);
        cum += static_cast<long double>(std::norm(cm));
        // Stop once both the discarded probability and the last kept weight
        // are negligible; moment sums weight the tail by powers of m, so the
        // probability criterion alone is not enough at small |xi|.
        if (1.0L - cum < tail_tol && std::norm(cm) < 0.01 * tail_tol) return c;
    }
    throw truncation_error("pcs_coefficients: basis cap exceeded before reaching tail_tol");
}

std::vector<cdouble> bgcs_coefficients(const BarutGirardelloState& s, double tail_tol, int cap) {
    validate(s);
    check_tail_tol(tail_tol);
    const double za = std::abs(s.z);
    if (za == 0.0) return {cdouble{1.0, 0.0}};

    // Normalization |z|^{2n-1} / I_{2n-1}(2|z|) with the Bessel factor kept
    // scaled:  ln I_nu(2|z|) = ln(e^{-2|z|} I_nu(2|z|)) + 2|z|.
    const double nu = 2.0 * s.n - 1.0;
    const double log_bessel = std::log(sf::bessel_i_scaled(nu, 2.0 * za)) + 2.0 * za;
    const double log_norm = 0.5 * (nu * std::log(za) - log_bessel);
    const double phase = std::arg(s.z);
    const double log_za = std::log(za);

    std::vector<cdouble> c;
    c.reserve(64);
    long double cum = 0.0L;
    for (int m = 0; m < cap; ++m) {
        const double md = static_cast<double>(m);
        const double log_abs = log_norm + md * log_za -
                               0.5 * (sf::log_gamma(md + 1.0) + sf::log_gamma(md + 2.0 * s.n));
        const cdouble cm = std::polar(std::exp(log_abs), md * phase);
        c.push_back(cm);
        cum += static_cast<long double>(std::norm(cm));
        if (1.0L - cum < tail_tol && std::norm(cm) < 0.01 * tail_tol) return c;
    }
    throw truncation_error("bgcs_coefficients: basis cap exceeded before reaching tail_tol");
}

std::vector<cdouble> bloch_coefficients(const BlochState& s) {
    validate(s);
    const int twoj = static_cast<int>(std::llround(2.0 * s.j));
    std::vector<cdouble> c(static_cast<std::size_t>(twoj) + 1, cdouble{0.0, 0.0});

    const double y = std::norm(s.mu);
    if (y == 0.0) {
        c[0] = 1.0;  // lowest weight m = -j
        return c;
    }
    const double log_norm = -s.j * std::log1p(y);
    const double phase = std::arg(s.mu);
    const double log_mu_abs = std::log(std::abs(s.mu));
    for (int i = 0; i <= twoj; ++i) {
        // i = j + m, binomial weight sqrt(C(2j, j+m)).
        const double id = static_cast<double>(i);
        const double log_abs = log_norm +
                               0.5 * sf::log_binomial(static_cast<double>(twoj), id) +
                               id * log_mu_abs;
        c[static_cast<std::size_t>(i)] = std::polar(std::exp(log_abs), id * phase);
    }
    return c;
}

MomentTable moments_series(const std::vector<cdouble>& coeffs, AlgebraKind kind, double index) {
    const std::size_t size = coeffs.size();
    MomentTable t;
    if (size == 0) return t;

    // Ladder matrix elements: K_+|m> = a_m |m+1>, K_-|m> = b_m |m-1>.
    const auto kz_of = [&](std::size_t i) {
        const double m = static_cast<double>(i);
        return kind == AlgebraKind::SU11 ? m + index : m - index;
    };
    const auto a_of = [&](std::size_t i) {
        const double m = static_cast<double>(i);
        if (kind == AlgebraKind::SU11) return std::sqrt((m + 1.0) * (m + 2.0 * index));
        const double mw = m - index;  // weight
        return std::sqrt((index - mw) * (index + mw + 1.0));
    };
    const auto b2_of = [&](std::size_t i) {  // b_m^2 = <K_+ K_-> diagonal element
        const double m = static_cast<double>(i);
        if (kind == AlgebraKind::SU11) return m * (m + 2.0 * index - 1.0);
        const double mw = m - index;
        return (index + mw) * (index - mw + 1.0);
    };

    for (std::size_t i = 0; i < size; ++i) {
        const double p = std::norm(coeffs[i]);
        const double kz = kz_of(i);
        const double a = a_of(i);
        t.kz += p * kz;
        t.kz2 += p * kz * kz;
        t.kpkm += p * b2_of(i);
        t.kmkp += p * a * a;
        if (i + 1 < size) {
            const cdouble step = std::conj(coeffs[i + 1]) * coeffs[i] * a;
            t.kp += step;
            t.kzkp += step * (kz + 1.0);
        }
        if (i + 2 < size) {
            t.kp2 += std::conj(coeffs[i + 2]) * coeffs[i] * a_of(i + 1) * a;
        }
    }
    return t;
}

MomentTable moments_closed(const PerelomovState& s) {
    validate(s);
    // Derived from the displacement generating function
    //   G(x) = (1 - x)^{-2k},  x = |xi|^2:
    // weighted sums of m and m^2 are x G'/G and (x d/dx)^2 G / G, giving
    // rational functions of x; ladder offsets shift the weight index.
    const double k = s.k;
    const double x = std::norm(s.xi);
    const double e = 1.0 - x;
    const cdouble xic = std::conj(s.xi);

    MomentTable t;
    t.kz = k * (1.0 + x) / e;
    t.kz2 = (k * k * (1.0 + x) * (1.0 + x) + 2.0 * k * x) / (e * e);
    t.kp = 2.0 * k * xic / e;
    t.kp2 = 2.0 * k * (2.0 * k + 1.0) * xic * xic / (e * e);
    t.kzkp = 2.0 * k * xic * (k + 1.0 + k * x) / (e * e);
    t.kmkp = 2.0 * k * (1.0 + 2.0 * k * x) / (e * e);
    t.kpkm = 2.0 * k * x * (2.0 * k + x) / (e * e);
    return t;
}

MomentTable moments_closed(const BarutGirardelloState& s) {
    validate(s);
    // K_- eigenstate: every normally ordered string with K_- rightmost and
    // K_+ leftmost collapses onto powers of z.  <K_z^p> follows from
    // (x/2 d/dx)^p applied to x I_{2n-1}(x) at x = 2|z|, which reduces to
    // the two Bessel ratios below.
    const double za = std::abs(s.z);
    const double nu = 2.0 * s.n - 1.0;
    const double r1 = sf::bessel_ratio(nu, 2.0 * za);        // I_{2n}/I_{2n-1}
    const double r2 = sf::bessel_ratio(nu + 1.0, 2.0 * za);  // I_{2n+1}/I_{2n}
    const double q = s.n + za * r1;                          // <K_z>
    const cdouble zc = std::conj(s.z);

    MomentTable t;
    t.kz = q;
    t.kz2 = s.n * s.n + (2.0 * s.n + 1.0) * za * r1 + za * za * r1 * r2;
    t.kp = zc;
    t.kp2 = zc * zc;
    t.kzkp = zc * (q + 1.0);
    t.kpkm = za * za;
    t.kmkp = za * za + 2.0 * q;  // [K_-, K_+] = +2 K_z in the discrete series
    return t;
}

MomentTable moments_closed(const BlochState& s) {
    validate(s);
    // The spin-j coherent state factorizes into 2j independent spin-1/2
    // constituents, each excited with probability y/(1+y); first and second
    // moments follow from sums over single-spin expectations.
    const double j = s.j;
    const double y = std::norm(s.mu);
    const double d = 1.0 + y;
    const cdouble muc = std::conj(s.mu);
    const double twoj = 2.0 * j;
    const double pair = twoj * (twoj - 1.0);  // ordered pairs of constituents

    MomentTable t;
    t.kz = j * (y - 1.0) / d;
    t.kz2 = pair * (y - 1.0) * (y - 1.0) / (4.0 * d * d) + j / 2.0;
    t.kp = twoj * muc / d;
    t.kp2 = pair * muc * muc / (d * d);
    t.kzkp = j * muc * ((twoj - 1.0) * (y - 1.0) + d) / (d * d);
    t.kpkm = pair * y / (d * d) + twoj * y / d;
    t.kmkp = pair * y / (d * d) + twoj / d;
    return t;
}

StaticVariances variances_from_moments(const MomentTable& m) {
    // K_x = (K+ + K-)/2, K_y = (K+ - K-)/(2i); <K-^2> = conj(<K+^2>).
    StaticVariances v;
    const double sym = m.kpkm + m.kmkp;
    v.vx = 0.25 * (sym + 2.0 * m.kp2.real()) - m.kp.real() * m.kp.real();
    v.vy = 0.25 * (sym - 2.0 * m.kp2.real()) - m.kp.imag() * m.kp.imag();
    return v;
}

}  // namespace trimode
