#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knotslice {

enum class ErrorCode {
  malformed_code,
  non_realizable,
  non_planar,
  disconnected,
  not_alternating,
  not_definite,
  inapplicable,
  invalid_band,
  not_computable,
  not_a_knot,
  invalid_embedding,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace knotslice
