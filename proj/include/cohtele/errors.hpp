#pragma once

#include <stdexcept>
#include <string>

namespace cohtele {

// Shape / subsystem-dimension mismatches.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inputs that violate a documented precondition (non-Hermitian matrix,
// parameters out of range, non-unitary basis, ...).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A Choi matrix with a negative eigenvalue beyond tolerance.
struct not_completely_positive : std::runtime_error {
    double min_eigenvalue;
    not_completely_positive(const std::string& what, double min_eig)
        : std::runtime_error(what), min_eigenvalue(min_eig) {}
};

// Measurement outcome with (numerically) zero probability; the conditional
// state is undefined.
struct degenerate_outcome : std::runtime_error {
    double probability;
    degenerate_outcome(const std::string& what, double prob)
        : std::runtime_error(what), probability(prob) {}
};

}  // namespace cohtele
