#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steffenlab {

enum class ErrorKind {
    LoopRejected,
    VertexOutOfRange,
    NonPositiveMultiplicity,
    NotEnoughParallelEdges,
    SyntaxError,
    InstanceTooLarge,
    NotShortestCycle,
    CoverageMismatch,
    PreconditionFailed,
    BadParameter,
    VertexNotInV0,
    ConfigError,
    SolverTimeout,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports goes through this type; `kind()` lets
// callers branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, const std::string& what)
        : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case ErrorKind::NotEnoughParallelEdges: return "NotEnoughParallelEdges";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::NotShortestCycle: return "NotShortestCycle";
    case ErrorKind::CoverageMismatch: return "CoverageMismatch";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::VertexNotInV0: return "VertexNotInV0";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::SolverTimeout: return "SolverTimeout";
    }
    return "Unknown";
}

} // namespace steffenlab
