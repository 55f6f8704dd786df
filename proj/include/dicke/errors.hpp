#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

// Input to the Hermitian eigensolver deviates from m = m^dagger beyond tolerance.
struct NonHermitianInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// X-state parameters violate positivity, normalization, or the coherence bound.
struct InvalidStateParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Matrix fails the density-matrix gates (Hermiticity, unit trace, positivity).
struct NotPhysical : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix has support outside the X-form sparsity pattern (one-photon coherences
// or antisymmetric-state population). Carries the offending entry position.
struct NotXForm : std::runtime_error {
    NotXForm(int row_, int col_, const std::string& reason)
        : std::runtime_error("matrix entry (" + std::to_string(row_) + "," +
                             std::to_string(col_) + "): " + reason),
          row(row_), col(col_) {}
    int row;
    int col;
};

// Driving-field parameters outside the physical domain, e.g. |M| > sqrt(N(N+1)).
struct UnphysicalField : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed density-matrix or report JSON.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dicke
