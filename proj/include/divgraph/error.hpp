#ifndef DIVGRAPH_ERROR_HPP
#define DIVGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace divgraph {

enum class ErrorCode {
  NotClosed,
  NoIdentity,
  NoInverse,
  NotAssociative,
  OrderCapExceeded,
  DegreeMismatch,
  UnknownDescriptor,
  ParseError,
  LatticeCapExceeded,
  NotEvenClass,
  NotSplitClass,
  TypeMismatch,
  MalformedGraph,
  CanonicalizationBudgetExceeded,
};

std::string_view to_string(ErrorCode code);

/// Broad grouping used by the command line front end to pick an exit status.
enum class ErrorCategory { Validation, Capacity, Internal };

ErrorCategory category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace divgraph

#endif  // DIVGRAPH_ERROR_HPP
