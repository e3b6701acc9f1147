#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

enum class ErrorKind {
    DegenerateConversion,
    CavityResonance,
    InvalidParameter,
    EvaluationDomain,
    PoleEncountered,
    ToleranceNotMet,
    NonCausalModel,
    NonUnitaryInput,
    CutoffTooCoarse,
    ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library. The kind lets callers
/// (the CLI in particular) map failures onto exit codes without RTTI games.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// True for failures of the numerics (as opposed to bad input).
    bool is_numerical() const noexcept;

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class TypedError : public Error {
public:
    explicit TypedError(const std::string& what) : Error(K, what) {}
};

using DegenerateConversion = TypedError<ErrorKind::DegenerateConversion>;
using CavityResonance = TypedError<ErrorKind::CavityResonance>;
using InvalidParameter = TypedError<ErrorKind::InvalidParameter>;
using EvaluationDomain = TypedError<ErrorKind::EvaluationDomain>;
using PoleEncountered = TypedError<ErrorKind::PoleEncountered>;
using NonCausalModel = TypedError<ErrorKind::NonCausalModel>;
using NonUnitaryInput = TypedError<ErrorKind::NonUnitaryInput>;
using CutoffTooCoarse = TypedError<ErrorKind::CutoffTooCoarse>;
using ParseError = TypedError<ErrorKind::ParseError>;

/// Thrown when an integral or series cannot reach the requested accuracy
/// within its budget. Carries the best estimate obtained so far.
class ToleranceNotMet : public Error {
public:
    ToleranceNotMet(const std::string& what, double best_value, double best_error)
        : Error(ErrorKind::ToleranceNotMet, what),
          best_value_(best_value),
          best_error_(best_error) {}

    double best_value() const noexcept { return best_value_; }
    double best_error() const noexcept { return best_error_; }

private:
    double best_value_;
    double best_error_;
};

}  // namespace casimir
