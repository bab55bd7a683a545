#pragma once

#include <stdexcept>
#include <string>

namespace sol3 {

enum class ErrorCode {
    NotSol,
    NotUnion,
    NotAClass,
    BadShape,
    NonHomogeneous,
    BadDims,
    NotApplicable,
    ZeroClass,
    CrossCheckMismatch,
    Overflow,
    Parse,
};

const char* to_string(ErrorCode code);

// Every recoverable failure in the library is reported through this type.
// Internal invariant violations (dual-path disagreements) throw std::logic_error.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace sol3
