#pragma once

#include <stdexcept>
#include <string>

namespace smoothbench {

/// Failure categories surfaced by the library. CLI maps these to exit code 2.
enum class ErrorCode {
    EmptyOrTooShort,
    NonFinite,
    GridMismatch,
    LevelOutOfRange,
    DegreeTooLargeForWindow,
    ZeroCutoff,
    LengthMismatch,
    ZeroVariance,
    TooShort,
    NonPositiveTolerance,
    DatasetTooShort,
    AllLevelsFailed,
    DegenerateSamples,
    BadInterval,
    InconsistentMethodSets,
    Io,
    Parse,
    NonMonotonicTime,
    UnknownName,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace smoothbench
