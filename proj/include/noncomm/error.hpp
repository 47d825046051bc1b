#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noncomm {

enum class ErrorKind {
    DimensionMismatch,
    BackendMismatch,
    CapExceeded,
    Domain,
    Parse,
    Numerical,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported as an Error carrying a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace noncomm
