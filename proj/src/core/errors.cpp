#include "errors.hpp"

namespace mdyn {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::io_error: return "IoError";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::invalid_map: return "InvalidMap";
        case ErrorCode::precision_exhausted: return "PrecisionExhausted";
        case ErrorCode::not_differentiable: return "NotDifferentiable";
        case ErrorCode::at_critical_point: return "AtCriticalPoint";
        case ErrorCode::not_smooth: return "NotSmooth";
        case ErrorCode::root_isolation_failure: return "RootIsolationFailure";
        case ErrorCode::calibration_failure: return "CalibrationFailure";
        case ErrorCode::uncertain_prefix: return "UncertainPrefix";
        case ErrorCode::insufficient_horizon: return "InsufficientHorizon";
        case ErrorCode::insufficient_data: return "InsufficientData";
        case ErrorCode::not_invertible: return "NotInvertible";
        case ErrorCode::check_failed: return "CheckFailed";
        case ErrorCode::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace mdyn
