#include "hke/error.hpp"

namespace hke {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateSet: return "DuplicateSet";
    case Errc::EmptySet: return "EmptySet";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::EmptySelector: return "EmptySelector";
    case Errc::NotRelevant: return "NotRelevant";
    case Errc::TooLarge: return "TooLarge";
    case Errc::OverlappingSelectors: return "OverlappingSelectors";
    case Errc::NotHke: return "NotHke";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooSmall: return "TooSmall";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::NotASubset: return "NotASubset";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::AlphaMismatch: return "AlphaMismatch";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::RangeError: return "RangeError";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CoreTooSmall: return "CoreTooSmall";
    }
    return "Unknown";
}

} // namespace hke
