#pragma once

#include <iosfwd>
#include <string>

#include "trimode/dynamics.hpp"

namespace trimode {

class usage_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// One complete, runnable configuration: model, initial state, time grid,
/// truncation budget, output destination ("-" = standard output).
struct Scenario {
    Model model{};
    StateSpec state{};
    double t_max = 20.0;
    int steps = 2000;
    double tail_tol = 1e-10;
    std::string output = "-";
};

/// Named figure configurations.  Valid ids: fig1a, fig1b, fig1c, fig2,
/// fig3-mu0.5, fig3-mu10, fig3-mu100.  The curves of interest are
/// independent of the representation index, which the presets pin to
/// k = 1/4 (fig1), n = 2 (fig2) and j = 5 (fig3).  t_max covers two periods
/// (8*pi/g) with 2000 steps.
Scenario figure_preset(const std::string& id);

std::vector<std::string> figure_preset_ids();

/// CSV schema: header `t,vx,vy,kz,sx,sy,product,bound`, one row per grid
/// point, shortest-round-trip float formatting, locale independent, `nan`
/// for undefined squeezing factors.
void write_records_csv(std::ostream& os, std::span<const QuadratureRecord> records);

std::string records_to_csv(std::span<const QuadratureRecord> records);

/// Matrix dump schema: header `t,m11,...,m33`, same formatting rules.
std::string matrix_rows_to_csv(const Model& model, std::span<const double> t_grid);

/// Run a scenario end to end: sweep the grid, write the CSV to
/// scenario.output (or stdout for "-").  Returns the records.
std::vector<QuadratureRecord> run_scenario(const Scenario& scenario);

/// Shortest-round-trip decimal formatting used by every CSV emitter.
std::string format_double(double value);

}  // namespace trimode
