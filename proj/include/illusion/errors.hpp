#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace illusion {

enum class ErrorKind {
    InvalidInput,
    InvalidMedium,
    DegenerateInterface,
    NonInvertibleSegment,
    ResonantSingularity,
    SheetResonance,
    OpenCircuit,
    DivisionDomain,
    DegenerateSynthesis,
    Parse,
    DuplicateState,
    EmptyMap,
    MissingFrequency,
    InfeasibleCodingSet,
    Domain,
    EvanescentOrder,
    Config,
    Write,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI
// sweep driver in particular) can record it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace illusion
