#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace whrt {

enum class ErrorCode {
    InvalidConstraint,
    InvalidTask,
    InvalidTaskSet,
    EmptyTaskSet,
    HardTaskHasNoTransform,
    NotHighTolerance,
    SequenceTooShort,
    WindowTooLarge,
    InvalidConfig,
    InvalidSpec,
    Infeasible,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; callers
// switch on code() when they need to distinguish.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace whrt
