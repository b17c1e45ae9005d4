#include "illusion/errors.hpp"

namespace illusion {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidMedium: return "invalid-medium";
    case ErrorKind::DegenerateInterface: return "degenerate-interface";
    case ErrorKind::NonInvertibleSegment: return "non-invertible-segment";
    case ErrorKind::ResonantSingularity: return "resonant-singularity";
    case ErrorKind::SheetResonance: return "sheet-resonance";
    case ErrorKind::OpenCircuit: return "open-circuit";
    case ErrorKind::DivisionDomain: return "division-domain";
    case ErrorKind::DegenerateSynthesis: return "degenerate-synthesis";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DuplicateState: return "duplicate-state";
    case ErrorKind::EmptyMap: return "empty-map";
    case ErrorKind::MissingFrequency: return "missing-frequency";
    case ErrorKind::InfeasibleCodingSet: return "infeasible-coding-set";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::EvanescentOrder: return "evanescent-order";
    case ErrorKind::Config: return "config";
    case ErrorKind::Write: return "write";
    }
    return "unknown";
}

}  // namespace illusion
