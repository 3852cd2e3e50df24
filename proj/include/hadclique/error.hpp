#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hadclique {

enum class ErrorKind {
    Range,
    Weight,
    Pattern,
    MismatchedT,
    KOutOfRange,
    InfeasibleQuarter,
    IsolatedVertex,
    TooLarge,
    InvalidClique,
    NotOrthogonal,
    BadShape,
    NotNormalized,
    DecodeFailure,
    RaggedRows,
    BadCharacter,
    NoDecomposition,
    InvalidSeed,
    BothEmpty,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hadclique
