#include "sol3/error.hpp"

namespace sol3 {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NotSol: return "NotSol";
    case ErrorCode::NotUnion: return "NotUnion";
    case ErrorCode::NotAClass: return "NotAClass";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NonHomogeneous: return "NonHomogeneous";
    case ErrorCode::BadDims: return "BadDims";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::CrossCheckMismatch: return "CrossCheckMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace sol3
