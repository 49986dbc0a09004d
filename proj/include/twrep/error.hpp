#pragma once

#include <stdexcept>
#include <string>

namespace twrep {

enum class ErrorKind {
    FieldMismatch,
    DimensionMismatch,
    AlgebraMismatch,
    DiagramMismatch,
    CyclicQuiver,
    HypothesisViolated,
    FunctorNotExact,
    LiftFailure,
    UniquenessFailure,
    InvalidData,
    NotVectDiagram,
    Internal,
};

const char* to_string(ErrorKind kind);

// Base exception for the library. The kind decides how the CLI maps it to an
// exit code: data errors exit 1, hypothesis failures exit 2, internal breaches 3.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when a certified exactness hypothesis fails for an arrow.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(std::string arrow, std::string side)
        : Error(ErrorKind::HypothesisViolated,
                "functor for arrow '" + arrow + "' is not exact on the " + side + " side"),
          arrow_(std::move(arrow)), side_(std::move(side)) {}

    const std::string& arrow() const noexcept { return arrow_; }
    const std::string& side() const noexcept { return side_; }

private:
    std::string arrow_;
    std::string side_;
};

}  // namespace twrep
