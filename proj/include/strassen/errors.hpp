#pragma once

#include <stdexcept>
#include <string>

namespace strassen {

/// Arithmetic between scalars of different fields (or different prime moduli).
struct FieldMismatch : std::logic_error {
    explicit FieldMismatch(const std::string& what) : std::logic_error("field mismatch: " + what) {}
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error("division by zero: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

/// Parameter sextuple fails the generator's validity requirements.
struct InvalidParams : std::runtime_error {
    explicit InvalidParams(const std::string& what) : std::runtime_error("invalid parameters: " + what) {}
};

struct InvalidIndex : std::out_of_range {
    explicit InvalidIndex(const std::string& what) : std::out_of_range("invalid index: " + what) {}
};

/// The three forms handed to the volume-form scale computation are dependent.
struct DegenerateBasis : std::runtime_error {
    explicit DegenerateBasis(const std::string& what) : std::runtime_error("degenerate basis: " + what) {}
};

/// Calibration triple does not evaluate to 1 under the volume form.
struct BadCalibration : std::runtime_error {
    explicit BadCalibration(const std::string& what) : std::runtime_error("bad calibration: " + what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument("dimension mismatch: " + what) {}
};

/// A bilinear algorithm that fails exact verification was handed to the recursive engine.
struct UnverifiedAlgorithm : std::runtime_error {
    explicit UnverifiedAlgorithm(const std::string& what) : std::runtime_error("unverified algorithm: " + what) {}
};

}  // namespace strassen
