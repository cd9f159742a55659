#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stick {

enum class ErrorCode {
    NotPrime,
    RamifiedPrime,
    NotADivisor,
    NotCoprime,
    IndexOutOfRange,
    ModulusMismatch,
    DimensionMismatch,
    NotSquare,
    HPlusUnknown,
    MalformedTable,
    MissingPrime,
    InexactDivision,
    ParseError,
    InvalidArgument,
    InternalInvariant,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library surfaces as this type; `code()`
/// names which contract was broken.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace stick
