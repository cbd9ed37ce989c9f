#pragma once

#include <stdexcept>
#include <string>

namespace tg {

// Failure vocabulary shared by the whole library.  Every throwing operation
// documents which of these it can raise; the CLI maps any of them to exit
// code 2 (validation) unless stated otherwise.
enum class errc {
    InvalidDigit,
    NotAType,
    NotIrreducible,
    Reducible,
    BadWidth,
    SizeMismatch,
    WidthMismatch,
    TooSmall,
    TrivialType,
    DimensionMismatch,
    BadRange,
    IndexOut,
    CoverageGap,
    ImageNotVertex,
    BudgetExceeded,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::InvalidDigit: return "InvalidDigit";
        case errc::NotAType: return "NotAType";
        case errc::NotIrreducible: return "NotIrreducible";
        case errc::Reducible: return "Reducible";
        case errc::BadWidth: return "BadWidth";
        case errc::SizeMismatch: return "SizeMismatch";
        case errc::WidthMismatch: return "WidthMismatch";
        case errc::TooSmall: return "TooSmall";
        case errc::TrivialType: return "TrivialType";
        case errc::DimensionMismatch: return "DimensionMismatch";
        case errc::BadRange: return "BadRange";
        case errc::IndexOut: return "IndexOut";
        case errc::CoverageGap: return "CoverageGap";
        case errc::ImageNotVertex: return "ImageNotVertex";
        case errc::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

// Library exception: carries a machine-readable code plus a human message.
class error : public std::runtime_error {
public:
    error(errc c, const std::string& detail)
        : std::runtime_error(std::string(errc_name(c)) + ": " + detail), code_(c) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& detail) { throw error(c, detail); }

}  // namespace tg
