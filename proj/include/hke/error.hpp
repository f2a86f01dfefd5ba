#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hke {

enum class Errc {
    ParseError,
    DuplicateSet,
    EmptySet,
    EmptyFamily,
    UniverseTooLarge,
    EmptySelector,
    NotRelevant,
    TooLarge,
    OverlappingSelectors,
    NotHke,
    IndexOutOfRange,
    TooSmall,
    AlphaOutOfRange,
    NotMaximal,
    NotASubset,
    UnknownLabel,
    AlphaMismatch,
    SelfLoop,
    DuplicateEdge,
    PreconditionFailed,
    TheoremViolation,
    RangeError,
    BudgetExceeded,
    CoreTooSmall,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure in the library is reported through this type; `code()` is
// what callers and tests switch on, `what()` carries the detail.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace hke
