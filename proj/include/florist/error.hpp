#pragma once

#include <stdexcept>
#include <string>

namespace florist {

enum class Errc {
    InconsistentRotation,
    NonSimpleGraph,
    ImproperPrecoloring,
    EmptyList,
    DisconnectedInput,
    SizeCapExceeded,
    NotAPoppy,
    HypothesisViolated,
    Graph6Syntax,
    RotationMismatch,
    Syntax,
    Validation,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InconsistentRotation: return "InconsistentRotation";
        case Errc::NonSimpleGraph: return "NonSimpleGraph";
        case Errc::ImproperPrecoloring: return "ImproperPrecoloring";
        case Errc::EmptyList: return "EmptyList";
        case Errc::DisconnectedInput: return "DisconnectedInput";
        case Errc::SizeCapExceeded: return "SizeCapExceeded";
        case Errc::NotAPoppy: return "NotAPoppy";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::Graph6Syntax: return "Graph6Syntax";
        case Errc::RotationMismatch: return "RotationMismatch";
        case Errc::Syntax: return "Syntax";
        case Errc::Validation: return "Validation";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace florist
