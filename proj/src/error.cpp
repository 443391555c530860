#include "plutus/error.hpp"

namespace plutus {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::FileNotFound: return "FileNotFound";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::EmptySeries: return "EmptySeries";
        case ErrorKind::DuplicateRow: return "DuplicateRow";
        case ErrorKind::UnknownMonth: return "UnknownMonth";
        case ErrorKind::MissingPrice: return "MissingPrice";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::SeriesTooShort: return "SeriesTooShort";
        case ErrorKind::ZeroVolatility: return "ZeroVolatility";
        case ErrorKind::ZeroDownside: return "ZeroDownside";
        case ErrorKind::ZeroTrackingError: return "ZeroTrackingError";
        case ErrorKind::NoActiveQuote: return "NoActiveQuote";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::AllTrialsFailed: return "AllTrialsFailed";
        case ErrorKind::ConstraintViolated: return "ConstraintViolated";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UnknownKey: return "UnknownKey";
        case ErrorKind::InvalidValue: return "InvalidValue";
        case ErrorKind::NoReadme: return "NoReadme";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownKey:
        case ErrorKind::InvalidValue:
            return 2;
        case ErrorKind::FileNotFound:
        case ErrorKind::SchemaError:
        case ErrorKind::EmptySeries:
        case ErrorKind::DuplicateRow:
        case ErrorKind::UnknownMonth:
        case ErrorKind::MissingPrice:
        case ErrorKind::LengthMismatch:
            return 3;
        case ErrorKind::NoReadme:
            return 5;
        default:
            return 4;
    }
}

}  // namespace plutus
