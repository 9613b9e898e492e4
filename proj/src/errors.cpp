#include "hyperarr/errors.hpp"

namespace hyperarr {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::ZeroForm: return "ZeroForm";
        case ErrorKind::DuplicateHyperplane: return "DuplicateHyperplane";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::MalformedRational: return "MalformedRational";
        case ErrorKind::MalformedInput: return "MalformedInput";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotACircuit: return "NotACircuit";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

}  // namespace hyperarr
