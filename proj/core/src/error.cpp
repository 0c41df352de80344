#include "whrt/error.hpp"

namespace whrt {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidConstraint: return "InvalidConstraint";
        case ErrorCode::InvalidTask: return "InvalidTask";
        case ErrorCode::InvalidTaskSet: return "InvalidTaskSet";
        case ErrorCode::EmptyTaskSet: return "EmptyTaskSet";
        case ErrorCode::HardTaskHasNoTransform: return "HardTaskHasNoTransform";
        case ErrorCode::NotHighTolerance: return "NotHighTolerance";
        case ErrorCode::SequenceTooShort: return "SequenceTooShort";
        case ErrorCode::WindowTooLarge: return "WindowTooLarge";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace whrt
