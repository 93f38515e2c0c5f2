#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimode::checks {

/// One verification outcome.  `measured` is the worst observed value of the
/// quantity being bounded and `threshold` the limit it must respect (the
/// direction is part of the check; for margin-style checks the measured
/// value must stay at or above zero).
struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string note;
};

/// Invariant suites grouped by subsystem.  Valid names: "algebra",
/// "states", "oracle", "all".  Throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& suite);

/// The eleven acceptance criteria, in order.
std::vector<CheckResult> acceptance_criteria();

/// Prints one line per result; returns the number of failures.
int report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace trimode::checks
