#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexicov {

enum class ErrorCode {
  kInvalidArgument,
  kEmptyInput,
  kConfigMismatch,
  kMalformedRow,
  kRangeTooSmall,
  kInvalidUtf8,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lexicov
