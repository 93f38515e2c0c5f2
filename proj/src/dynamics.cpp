#include "trimode/dynamics.hpp"

#include <cmath>
#include <cstdint>
#include <exception>

#include "trimode/special_functions.hpp"

namespace trimode {

MixingAmplitudes mixing_amplitudes(const CoefficientSet& cs) {
    MixingAmplitudes a;
    a.f = 0.5 * cdouble{cs.r1, -cs.j_minus};
    a.g = 0.5 * cdouble{cs.j_plus, -cs.r2};
    a.h = 0.5 * cdouble{cs.s_minus, -cs.v_plus};
    return a;
}

VarianceTriple variances_pcs(const PerelomovState& s, const CouplingTriple& c, double t) {
    validate(s);
    const CoefficientSet cs = coefficient_set(c, AlgebraKind::SU11, t);
    const MixingAmplitudes amp = mixing_amplitudes(cs);
    const double k = s.k;
    const double x = std::norm(s.xi);
    const double e = 1.0 - x;
    const cdouble xic = std::conj(s.xi);

    const auto variance = [&](const cdouble& a, double w) {
        // 2k { |a|^2 + (w - F)^2/e^2 + w (F - w)/e },  F = xi* a + xi a*.
        const double f2 = std::norm(a);
        const double cross = 2.0 * (xic * a).real();
        const double num = w - cross;
        return 2.0 * k * (f2 + num * num / (e * e) + w * (cross - w) / e);
    };

    VarianceTriple out;
    out.vx = variance(amp.f, cs.s_plus);
    out.vy = variance(amp.g, cs.v_minus);
    out.kz = k / e * ((1.0 + x) * cs.r3 + 4.0 * (xic * amp.h).real());  // 2[xi* h + c.c.]
    return out;
}

VarianceTriple variances_bgcs(const BarutGirardelloState& s, const CouplingTriple& c, double t) {
    validate(s);
    const CoefficientSet cs = coefficient_set(c, AlgebraKind::SU11, t);
    const MixingAmplitudes amp = mixing_amplitudes(cs);
    const double za = std::abs(s.z);
    const double n = s.n;
    // Every Bessel quotient is routed through the stable ratio; raw I_nu
    // values would overflow long before |z| reaches the interesting range.
    const double ratio = sf::bessel_ratio(2.0 * n - 1.0, 2.0 * za);
    const double q = n + za * ratio;
    const double curvature = za * (1.0 - ratio * ratio) + (1.0 - 2.0 * n) * ratio;
    const cdouble zc = std::conj(s.z);

    const auto variance = [&](const cdouble& a, double w) {
        const double cross = 2.0 * (zc * a).real();
        return 2.0 * std::norm(a) * q - w * cross + za * w * w * curvature;
    };

    VarianceTriple out;
    out.vx = variance(amp.f, cs.s_plus);
    out.vy = variance(amp.g, cs.v_minus);
    out.kz = cs.r3 * q + 2.0 * (zc * amp.h).real();
    return out;
}

VarianceTriple variances_bloch(const BlochState& s, const CouplingTriple& c, double t) {
    validate(s);
    const CoefficientSet cs = coefficient_set(c, AlgebraKind::SU2, t);
    const MixingAmplitudes amp = mixing_amplitudes(cs);
    const double j = s.j;
    const double y = std::norm(s.mu);
    const double d = 1.0 + y;
    const cdouble muc = std::conj(s.mu);

    const auto variance = [&](const cdouble& a, double w) {
        // 2j { (w - F) F / d + |a|^2 + y (w - F)^2 / d^2 },  F = mu* a + mu a*.
        const double cross = 2.0 * (muc * a).real();
        const double num = w - cross;
        return 2.0 * j * (num * cross / d + std::norm(a) + y * num * num / (d * d));
    };

    VarianceTriple out;
    out.vx = variance(amp.f, cs.s_plus);
    // The K_z coefficient of K_y(t) is V^(-) (row 2 of the solution matrix);
    // it is the partner of S^(+) in the x quadrature.
    out.vy = variance(amp.g, cs.v_minus);
    out.kz = j / d * ((y - 1.0) * cs.r3 + 4.0 * (muc * amp.h).real());
    return out;
}

std::optional<double> squeezing_factor(double variance, double kz) {
    if (variance < 0.0) {
        throw std::domain_error("squeezing_factor: variance must be nonnegative");
    }
    const double bound = 0.5 * std::fabs(kz);
    if (std::fabs(kz) < 1e-12 * std::fmax(1.0, variance)) {
        return std::nullopt;
    }
    return (variance - bound) / bound;
}

UncertaintyRecord uncertainty_record(double vx, double vy, double kz) {
    UncertaintyRecord r;
    r.product = vx * vy;
    r.bound = 0.25 * kz * kz;
    r.satisfied = r.product >= r.bound - 1e-9 * std::fmax(1.0, r.bound);
    return r;
}

void check_compatible(const Model& model, const StateSpec& state) {
    const bool wants_su11 = state.family != StateSpec::Family::Bloch;
    const bool is_su11 = model.kind == AlgebraKind::SU11;
    if (wants_su11 != is_su11) {
        throw incompatible_state_error(
            wants_su11 ? "PCS/BGCS states require the SU11 model"
                       : "Bloch states require the SU2 model");
    }
}

QuadratureRecord evaluate_sample(const Model& model, const StateSpec& state, double t) {
    VarianceTriple v;
    switch (state.family) {
        case StateSpec::Family::Perelomov:
            v = variances_pcs(state.pcs, model.couplings, t);
            break;
        case StateSpec::Family::BarutGirardello:
            v = variances_bgcs(state.bgcs, model.couplings, t);
            break;
        case StateSpec::Family::Bloch:
            v = variances_bloch(state.bloch, model.couplings, t);
            break;
    }

    QuadratureRecord rec;
    rec.t = t;
    rec.vx = v.vx;
    rec.vy = v.vy;
    rec.kz = v.kz;
    const auto sx = squeezing_factor(std::fmax(v.vx, 0.0), v.kz);
    const auto sy = squeezing_factor(std::fmax(v.vy, 0.0), v.kz);
    rec.sx_defined = sx.has_value();
    rec.sy_defined = sy.has_value();
    rec.sx = sx.value_or(std::nan(""));
    rec.sy = sy.value_or(std::nan(""));
    const UncertaintyRecord u = uncertainty_record(v.vx, v.vy, v.kz);
    rec.product = u.product;
    rec.bound = u.bound;
    return rec;
}

std::vector<QuadratureRecord> sweep_serial(const Model& model, const StateSpec& state,
                                           std::span<const double> t_grid) {
    check_compatible(model, state);
    std::vector<QuadratureRecord> out(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        out[i] = evaluate_sample(model, state, t_grid[i]);
    }
    return out;
}

std::vector<QuadratureRecord> sweep(const Model& model, const StateSpec& state,
                                    std::span<const double> t_grid) {
    check_compatible(model, state);
    std::vector<QuadratureRecord> out(t_grid.size());
    const std::int64_t count = static_cast<std::int64_t>(t_grid.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] =
                evaluate_sample(model, state, t_grid[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<double> uniform_grid(double t_max, int steps) {
    if (!(t_max > 0.0) || steps < 0) {
        throw std::domain_error("uniform_grid: t_max must be positive and steps >= 0");
    }
    std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        grid[static_cast<std::size_t>(i)] =
            steps == 0 ? 0.0 : t_max * static_cast<double>(i) / static_cast<double>(steps);
    }
    return grid;
}

}  // namespace trimode
