#include "divgraph/error.hpp"

namespace divgraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnknownDescriptor: return "UnknownDescriptor";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LatticeCapExceeded: return "LatticeCapExceeded";
    case ErrorCode::NotEvenClass: return "NotEvenClass";
    case ErrorCode::NotSplitClass: return "NotSplitClass";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::MalformedGraph: return "MalformedGraph";
    case ErrorCode::CanonicalizationBudgetExceeded:
      return "CanonicalizationBudgetExceeded";
  }
  return "Unknown";
}

ErrorCategory category(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::LatticeCapExceeded:
    case ErrorCode::CanonicalizationBudgetExceeded:
      return ErrorCategory::Capacity;
    case ErrorCode::MalformedGraph:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Validation;
  }
}

}  // namespace divgraph
