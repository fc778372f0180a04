#pragma once

#include <stdexcept>
#include <string>

namespace bim {

// Operands have incompatible shapes.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The matrices do not satisfy the defining relations with scalar central elements.
class NotAModule : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A hypothesis of the universal mapping property fails for the chosen vector.
class PremiseViolated : public std::runtime_error {
public:
    PremiseViolated(std::string which, const std::string& what)
        : std::runtime_error(what), which_(std::move(which)) {}

    /// Short tag of the failing premise: "eigenvector", "ladder", "kappa", "lambda" or "mu".
    const std::string& which() const noexcept { return which_; }

private:
    std::string which_;
};

// prod_{i=0}^{d} (X - theta_i) does not kill the seed vector.
class AnnihilatorFails : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Characteristic polynomial has roots outside Q.
class NonSplitSpectrum : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A recovered parameter square is not the square of a rational.
class NotRationalFamily : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IdentificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed module file or command-line value.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace bim
