#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trimode/checks.hpp"
#include "trimode/scenario.hpp"

namespace {

struct StateOptions {
    std::string family = "pcs";
    double k = 0.25;
    double xi_abs = 0.5;
    double phi = M_PI / 2.0;
    double n = 2.0;
    double z_abs = 10.0;
    double z_arg = M_PI;
    double j = 5.0;
    double mu_abs = 0.5;
    double mu_arg = M_PI / 2.0;
};

trimode::StateSpec build_state(const StateOptions& o) {
    using trimode::StateSpec;
    if (o.family == "pcs") {
        return StateSpec::perelomov(trimode::make_perelomov(o.k, o.xi_abs, o.phi));
    }
    if (o.family == "bgcs") {
        return StateSpec::barut_girardello(
            trimode::make_barut_girardello(o.n, o.z_abs, o.z_arg));
    }
    if (o.family == "bloch") {
        return StateSpec::bloch_state(trimode::make_bloch(o.j, o.mu_abs, o.mu_arg));
    }
    throw trimode::usage_error("unknown state family '" + o.family + "'");
}

void add_state_options(CLI::App* app, StateOptions& o) {
    app->add_option("--state", o.family, "initial state family: pcs|bgcs|bloch")
        ->check(CLI::IsMember({"pcs", "bgcs", "bloch"}));
    app->add_option("--k", o.k, "Bargmann index of the PCS");
    app->add_option("--xi-abs", o.xi_abs, "|xi| of the PCS (0 <= |xi| < 1)");
    app->add_option("--phi", o.phi, "PCS caption angle phi (radians); xi = |xi| e^{-i phi}");
    app->add_option("--n", o.n, "BGCS representation index n > 0");
    app->add_option("--z-abs", o.z_abs, "|z| of the BGCS");
    app->add_option("--z-arg", o.z_arg, "argument of z (radians)");
    app->add_option("--j", o.j, "Bloch spin j (half-integer)");
    app->add_option("--mu-abs", o.mu_abs, "|mu| of the Bloch state");
    app->add_option("--mu-arg", o.mu_arg, "argument of mu (radians)");
}

struct ModelOptions {
    std::string kind = "su11";
    std::vector<double> lambda{0.1, 0.25, 1.0};
};

trimode::Model build_model(const ModelOptions& o) {
    trimode::Model m;
    m.kind = o.kind == "su11" ? trimode::AlgebraKind::SU11 : trimode::AlgebraKind::SU2;
    if (o.lambda.size() != 3) {
        throw trimode::usage_error("--lambda expects exactly three values a,b,c");
    }
    m.couplings = {o.lambda[0], o.lambda[1], o.lambda[2]};
    return m;
}

void add_model_options(CLI::App* app, ModelOptions& o) {
    app->add_option("--model", o.kind, "algebra kind: su11|su2")
        ->check(CLI::IsMember({"su11", "su2"}));
    app->add_option("--lambda", o.lambda, "coupling strengths a,b,c")
        ->delimiter(',')
        ->expected(3);
}

int run_and_report(const trimode::Scenario& scenario) {
    trimode::run_scenario(scenario);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact SU(1,1)/SU(2) generator dynamics and squeezing factors "
                 "for three coupled radiation modes"};
    app.require_subcommand(1);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a scenario over a time grid");
    ModelOptions sweep_model;
    StateOptions sweep_state;
    double t_max = 20.0;
    int steps = 2000;
    double tail_tol = 1e-10;
    std::string out_path = "-";
    add_model_options(sweep_cmd, sweep_model);
    add_state_options(sweep_cmd, sweep_state);
    sweep_cmd->add_option("--tmax", t_max, "end of the time grid");
    sweep_cmd->add_option("--steps", steps, "number of grid steps (rows = steps + 1)");
    sweep_cmd->add_option("--tail-tol", tail_tol, "basis tail probability budget");
    sweep_cmd->add_option("--out", out_path, "output CSV path ('-' = stdout)");

    // figure
    auto* figure_cmd = app.add_subcommand("figure", "run a named figure preset");
    std::string figure_id;
    std::string figure_out = "-";
    int figure_steps = -1;
    figure_cmd->add_option("id", figure_id, "preset id (fig1a, fig1b, fig1c, fig2, fig3-mu*)")
        ->required();
    figure_cmd->add_option("--out", figure_out, "output CSV path ('-' = stdout)");
    figure_cmd->add_option("--steps", figure_steps, "override the preset's 2000 steps");

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "dump the 3x3 solution matrix over a grid");
    ModelOptions matrix_model;
    double matrix_tmax = 20.0;
    int matrix_steps = 200;
    std::string matrix_out = "-";
    add_model_options(matrix_cmd, matrix_model);
    matrix_cmd->add_option("--tmax", matrix_tmax, "end of the time grid");
    matrix_cmd->add_option("--steps", matrix_steps, "number of grid steps");
    matrix_cmd->add_option("--out", matrix_out, "output CSV path ('-' = stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    std::string suite;
    verify_cmd->add_option("suite", suite, "algebra|states|oracle|all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e);
        return 2;
    }

    try {
        if (sweep_cmd->parsed()) {
            trimode::Scenario s;
            s.model = build_model(sweep_model);
            s.state = build_state(sweep_state);
            s.t_max = t_max;
            s.steps = steps;
            s.tail_tol = tail_tol;
            s.output = out_path;
            return run_and_report(s);
        }
        if (figure_cmd->parsed()) {
            trimode::Scenario s = trimode::figure_preset(figure_id);
            s.output = figure_out;
            if (figure_steps >= 0) s.steps = figure_steps;
            return run_and_report(s);
        }
        if (matrix_cmd->parsed()) {
            const trimode::Model m = build_model(matrix_model);
            const auto grid = trimode::uniform_grid(matrix_tmax, matrix_steps);
            const std::string csv = trimode::matrix_rows_to_csv(m, grid);
            if (matrix_out == "-") {
                std::cout << csv;
            } else {
                std::ofstream file(matrix_out, std::ios::binary);
                if (!file) {
                    std::cerr << "error: cannot open '" << matrix_out << "'\n";
                    return 1;
                }
                file << csv;
            }
            return 0;
        }
        if (verify_cmd->parsed()) {
            std::vector<trimode::checks::CheckResult> results;
            try {
                results = trimode::checks::run_suite(suite);
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << '\n';
                return 2;
            }
            const int failures = trimode::checks::report(std::cout, results);
            std::cout << (failures == 0 ? "all checks passed"
                                        : std::to_string(failures) + " check(s) failed")
                      << '\n';
            return failures == 0 ? 0 : 1;
        }
    } catch (const trimode::usage_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
