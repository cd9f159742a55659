#include "stick/error.hpp"

namespace stick {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::RamifiedPrime: return "RamifiedPrime";
    case ErrorCode::NotADivisor: return "NotADivisor";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::HPlusUnknown: return "HPlusUnknown";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}  // namespace stick
