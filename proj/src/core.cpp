#include "xyzq/core.hpp"

namespace xyzq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::IrregularGraph: return "IrregularGraph";
  }
  return "Unknown";
}

}  // namespace xyzq
