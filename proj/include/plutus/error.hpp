#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plutus {

enum class ErrorKind {
    // data
    FileNotFound,
    SchemaError,
    EmptySeries,
    DuplicateRow,
    UnknownMonth,
    MissingPrice,
    LengthMismatch,
    // metrics
    SeriesTooShort,
    ZeroVolatility,
    ZeroDownside,
    ZeroTrackingError,
    // engines
    NoActiveQuote,
    InvalidArgument,
    AllTrialsFailed,
    ConstraintViolated,
    // config
    ParseError,
    UnknownKey,
    InvalidValue,
    // compliance
    NoReadme,
    // output
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit code for a failure of this kind (2 config, 3 data, 4 runtime, 5 compliance).
int exit_code_for(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace plutus
