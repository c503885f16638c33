#pragma once

#include <stdexcept>
#include <string>

namespace mdyn {

enum class ErrorCode {
    io_error,
    parse_error,
    invalid_map,
    precision_exhausted,
    not_differentiable,
    at_critical_point,
    not_smooth,
    root_isolation_failure,
    calibration_failure,
    uncertain_prefix,
    insufficient_horizon,
    insufficient_data,
    not_invertible,
    check_failed,
    internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

} // namespace mdyn
