#pragma once

#include <stdexcept>
#include <string>

namespace rfso {

// Invalid argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Parameter combination that makes a formula degenerate (e.g. coincident
// Mellin-Barnes pole families, rho0 = 1 killing the scatter power).
struct DegenerateParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to reach its target accuracy. Carries the
// error estimate actually achieved.
struct NumericalError : std::runtime_error {
    double achieved_error;
    NumericalError(const std::string& msg, double achieved)
        : std::runtime_error(msg + " (achieved error " + std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
};

// Result would overflow double range.
struct OverflowError : std::range_error {
    using std::range_error::range_error;
};

// Combinatorial enumeration exceeded the configured cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

}  // namespace rfso
