#pragma once

#include <stdexcept>
#include <string>

namespace dwell {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad physical parameters (non-positive mass, hbar, amplitude, ...).
struct invalid_parameter : error {
    using error::error;
};

// Grid violates N odd / N >= 3 / h > 0.
struct invalid_grid : error {
    using error::error;
};

// Confinement-induced resonance: denominator of the 1D coupling vanished.
struct singularity_error : error {
    using error::error;
};

// Eigensolver did not converge; carries the backend iteration/info count.
struct solver_error : error {
    solver_error(const std::string& what, long info)
        : error(what + " (info=" + std::to_string(info) + ")"), info(info) {}
    long info;
};

// A state could not be assigned a definite symmetry/parity label.
struct classification_error : error {
    using error::error;
};

// An operation was called outside its documented precondition.
struct precondition_error : error {
    using error::error;
};

// Configuration file / CLI problems; carries 1-based line number when known.
struct config_error : error {
    explicit config_error(const std::string& what, int line = 0)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line(line) {}
    int line;
};

}
