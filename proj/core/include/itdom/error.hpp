#pragma once

#include <stdexcept>
#include <string>

namespace itdom {

enum class ErrorKind {
    InvalidEdge,
    LoopRejected,
    TooSmall,
    TooLarge,
    InvalidVertex,
    ParseError,
    ShapeError,
    NotOptimalWitness,
    EnumTooLarge,
    DegenerateBase,
    PreconditionFailed,
};

const char* to_string(ErrorKind kind);

// Single exception type for the whole library; `kind` identifies the
// violated contract so callers and tests can dispatch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace itdom
