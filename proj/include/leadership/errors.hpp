#ifndef LEADERSHIP_ERRORS_HPP
#define LEADERSHIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leadership {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a formula.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Identifies which model constraint a parameter set violates.
enum class Constraint {
    GainBound,        // Gamma_gain < kappa_max / (a * gamma)
    InfoGainBound,    // G_i < q / ((1 - p1) * a * gamma)
    LeaderType,       // NonPartisan: G2 = 0, G3 > 0; Partisan: G2 > 0, G3 > 0
    Interval,         // a field outside its interval
};

const char* constraint_name(Constraint c) noexcept;

/// A parameter set failed validation. `what()` names the violated constraint.
class ValidationError : public Error {
public:
    ValidationError(Constraint c, std::string field, const std::string& message)
        : Error(message), constraint_(c), field_(std::move(field)) {}

    Constraint constraint() const noexcept { return constraint_; }
    const std::string& field() const noexcept { return field_; }

private:
    Constraint constraint_;
    std::string field_;
};

/// The fixed-point iteration hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (JSON or CSV syntax, bad row).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that does not match the documented schema.
class SchemaError : public Error {
public:
    SchemaError(std::string field, const std::string& message)
        : Error(message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace leadership

#endif
