// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Registered with ctest as the `acceptance` test.

#include <iostream>

#include "trimode/checks.hpp"

int main() {
    std::cout.precision(15);
    const auto results = trimode::checks::acceptance_criteria();
    const int failures = trimode::checks::report(std::cout, results);
    std::cout << results.size() - static_cast<std::size_t>(failures) << "/" << results.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
