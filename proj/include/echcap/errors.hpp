#pragma once

#include <stdexcept>
#include <string>

namespace echcap {

// Exit codes used by the CLI; library errors carry the matching category.
enum class ErrorCode : int {
    Parse = 2,
    Precondition = 3,
    Resource = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    explicit ParseError(std::string message)
        : Error(ErrorCode::Parse, std::move(message)) {}
};

// Invalid parameters, degenerate regions, broken invariants.
class PreconditionError : public Error {
public:
    explicit PreconditionError(std::string message)
        : Error(ErrorCode::Precondition, std::move(message)) {}
};

// Enumeration budget exceeded; never a silent approximation.
class ResourceError : public Error {
public:
    explicit ResourceError(std::string message)
        : Error(ErrorCode::Resource, std::move(message)) {}
};

}  // namespace echcap
