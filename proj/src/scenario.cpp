#include "trimode/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace trimode {

namespace {

const CouplingTriple kFigureCouplings{0.1, 0.25, 1.0};

Scenario preset_base(AlgebraKind kind) {
    Scenario s;
    s.model.kind = kind;
    s.model.couplings = kFigureCouplings;
    const StructureFrequency g = structure_frequency(kFigureCouplings, kind);
    s.t_max = 8.0 * M_PI / g.g_abs;
    s.steps = 2000;
    s.tail_tol = 1e-10;
    return s;
}

}  // namespace

std::vector<std::string> figure_preset_ids() {
    return {"fig1a", "fig1b", "fig1c", "fig2", "fig3-mu0.5", "fig3-mu10", "fig3-mu100"};
}

Scenario figure_preset(const std::string& id) {
    // Phases that are exact multiples of pi/2 are written as exact complex
    // components rather than going through polar().
    if (id == "fig1a") {
        Scenario s = preset_base(AlgebraKind::SU11);
        s.state = StateSpec::perelomov({0.25, cdouble{0.0, -0.5}});  // (phi,|xi|) = (pi/2, 0.5)
        return s;
    }
    if (id == "fig1b") {
        Scenario s = preset_base(AlgebraKind::SU11);
        s.state = StateSpec::perelomov({0.25, cdouble{0.0, -0.8}});  // (pi/2, 0.8)
        return s;
    }
    if (id == "fig1c") {
        Scenario s = preset_base(AlgebraKind::SU11);
        s.state = StateSpec::perelomov(make_perelomov(0.25, 0.5, M_PI / 4.0));
        return s;
    }
    if (id == "fig2") {
        Scenario s = preset_base(AlgebraKind::SU11);
        s.state = StateSpec::barut_girardello({2.0, cdouble{-10.0, 0.0}});  // z = 10 e^{i pi}
        return s;
    }
    if (id == "fig3-mu0.5" || id == "fig3-mu10" || id == "fig3-mu100") {
        const double mu_abs = id == "fig3-mu0.5" ? 0.5 : (id == "fig3-mu10" ? 10.0 : 100.0);
        Scenario s = preset_base(AlgebraKind::SU2);
        // phi = pi/2 enters the Bloch parameter as mu = |mu| e^{+i phi}; the
        // opposite sign parks the |mu| = 10 state on the rotation axis and
        // kills the squeezing ordering the curves are known for.
        s.state = StateSpec::bloch_state({5.0, cdouble{0.0, mu_abs}});
        return s;
    }
    std::string all;
    for (const auto& known : figure_preset_ids()) {
        all += all.empty() ? known : ", " + known;
    }
    throw usage_error("unknown figure preset '" + id + "' (valid: " + all + ")");
}

std::string format_double(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_records_csv(std::ostream& os, std::span<const QuadratureRecord> records) {
    os << "t,vx,vy,kz,sx,sy,product,bound\n";
    for (const auto& r : records) {
        os << format_double(r.t) << ',' << format_double(r.vx) << ',' << format_double(r.vy)
           << ',' << format_double(r.kz) << ',' << format_double(r.sx) << ','
           << format_double(r.sy) << ',' << format_double(r.product) << ','
           << format_double(r.bound) << '\n';
    }
}

std::string records_to_csv(std::span<const QuadratureRecord> records) {
    std::ostringstream os;
    write_records_csv(os, records);
    return os.str();
}

std::string matrix_rows_to_csv(const Model& model, std::span<const double> t_grid) {
    std::ostringstream os;
    os << "t,m11,m12,m13,m21,m22,m23,m31,m32,m33\n";
    for (const double t : t_grid) {
        const EvolutionMatrix m = evolution_matrix(model.couplings, model.kind, t);
        os << format_double(t);
        for (const double entry : m.m) {
            os << ',' << format_double(entry);
        }
        os << '\n';
    }
    return os.str();
}

std::vector<QuadratureRecord> run_scenario(const Scenario& scenario) {
    check_compatible(scenario.model, scenario.state);
    const std::vector<double> grid = uniform_grid(scenario.t_max, scenario.steps);
    std::vector<QuadratureRecord> records = sweep(scenario.model, scenario.state, grid);

    if (scenario.output == "-") {
        write_records_csv(std::cout, records);
    } else {
        std::ofstream file(scenario.output, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open output file '" + scenario.output + "'");
        }
        write_records_csv(file, records);
        if (!file.good()) {
            throw std::runtime_error("write failed for '" + scenario.output + "'");
        }
    }
    return records;
}

}  // namespace trimode
