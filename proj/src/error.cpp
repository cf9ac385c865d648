#include "smoothbench/error.hpp"

namespace smoothbench {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyOrTooShort: return "EmptyOrTooShort";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::DegreeTooLargeForWindow: return "DegreeTooLargeForWindow";
    case ErrorCode::ZeroCutoff: return "ZeroCutoff";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NonPositiveTolerance: return "NonPositiveTolerance";
    case ErrorCode::DatasetTooShort: return "DatasetTooShort";
    case ErrorCode::AllLevelsFailed: return "AllLevelsFailed";
    case ErrorCode::DegenerateSamples: return "DegenerateSamples";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::InconsistentMethodSets: return "InconsistentMethodSets";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::UnknownName: return "UnknownName";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace smoothbench
