// Error codes shared by every latkit module.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latkit {

enum class Errc {
    // input / construction
    NotALattice,
    NoBottom,
    TooLarge,
    MalformedInput,
    // precondition failures
    UnboundedLattice,
    NotComplemented,
    NotIndependent,
    NotRegular,
    NotADirectSum,
    NotInRange,
    NotAVRelation,
    NoSectionalComplement,
    StageOverflow,
    PreconditionFailed,
    MissingStageRing,
    NoCofinalStage,
    NoLift,
    MultipleLifts,
    IncoherentSystem,
    // internal invariant violations (signal a bug, never expected)
    ConclusionViolated,
    LemmaViolated,
    AxiomViolated,
    NotWellDefined,
    DecompositionFailed,
    ViolationFound,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::NotALattice: return "NotALattice";
    case Errc::NoBottom: return "NoBottom";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MalformedInput: return "MalformedInput";
    case Errc::UnboundedLattice: return "UnboundedLattice";
    case Errc::NotComplemented: return "NotComplemented";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotADirectSum: return "NotADirectSum";
    case Errc::NotInRange: return "NotInRange";
    case Errc::NotAVRelation: return "NotAVRelation";
    case Errc::NoSectionalComplement: return "NoSectionalComplement";
    case Errc::StageOverflow: return "StageOverflow";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::MissingStageRing: return "MissingStageRing";
    case Errc::NoCofinalStage: return "NoCofinalStage";
    case Errc::NoLift: return "NoLift";
    case Errc::MultipleLifts: return "MultipleLifts";
    case Errc::IncoherentSystem: return "IncoherentSystem";
    case Errc::ConclusionViolated: return "ConclusionViolated";
    case Errc::LemmaViolated: return "LemmaViolated";
    case Errc::AxiomViolated: return "AxiomViolated";
    case Errc::NotWellDefined: return "NotWellDefined";
    case Errc::DecompositionFailed: return "DecompositionFailed";
    case Errc::ViolationFound: return "ViolationFound";
    case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

// Exit-code class of an error: 1 bad input, 2 precondition, 3 internal bug.
inline int errc_class(Errc c) {
    switch (c) {
    case Errc::NotALattice:
    case Errc::NoBottom:
    case Errc::MalformedInput:
        return 1;
    case Errc::ConclusionViolated:
    case Errc::LemmaViolated:
    case Errc::AxiomViolated:
    case Errc::NotWellDefined:
    case Errc::DecompositionFailed:
    case Errc::ViolationFound:
    case Errc::Internal:
        return 3;
    default:
        return 2;
    }
}

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, std::vector<int> witness = {})
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          witness_(std::move(witness)) {}

    Errc code() const { return code_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    Errc code_;
    std::vector<int> witness_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message, std::vector<int> witness = {}) {
    throw Error(code, message, std::move(witness));
}

inline void require(bool ok, Errc code, const std::string& message, std::vector<int> witness = {}) {
    if (!ok) fail(code, message, std::move(witness));
}

} // namespace latkit
