#include "novb/errors.hpp"

namespace novb {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::ZeroExponent: return "ZeroExponent";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::RelatorNonvanishing: return "RelatorNonvanishing";
    case Errc::ZeroClass: return "ZeroClass";
    case Errc::DependentRows: return "DependentRows";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case Errc::MalformedTerm: return "MalformedTerm";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::AllZero: return "AllZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::RankTooHigh: return "RankTooHigh";
    case Errc::ZeroCoordinate: return "ZeroCoordinate";
    case Errc::NoClass: return "NoClass";
    case Errc::BadJob: return "BadJob";
    }
    return "Error";
}

} // namespace novb
