#ifndef FXNET_ERROR_HPP
#define FXNET_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fxnet {

enum class ErrorCode {
    Parse = 1,
    Schema,
    MissingData,
    UnrecoverableColumn,
    UnknownCurrency,
    InsufficientData,
    DegenerateInput,
    UndefinedNormalization,
    Usage,
    Consistency,
    Io,
    InvalidArgument,
};

/// Library-wide exception type. Carries a stable code so the C boundary
/// can translate it into a status value without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace fxnet

#endif
