#include "cobord2/error.hpp"

namespace cobord2 {

const char* error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParameterTooLarge: return "ParameterTooLarge";
    case ErrorKind::UnitFails: return "UnitFails";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::WorkLimitExceeded: return "WorkLimitExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::CriterionDisagreement: return "CriterionDisagreement";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cobord2
