#include "dgs/error.hpp"

namespace dgs {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::ParallelNonLoopArc: return "ParallelNonLoopArc";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::BothZeroMod2: return "BothZeroMod2";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::TooLargeForEnumeration: return "TooLargeForEnumeration";
        case ErrorKind::TooLargeForSearch: return "TooLargeForSearch";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "Unknown";
}

}  // namespace dgs
