#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3 {

// Every domain failure carries one of these codes; the CLI prints the name.
enum class ErrorCode {
  UnknownLattice,
  DegenerateForm,
  BadGram,
  BadSublattice,
  NotIsometry,
  NotInvolution,
  RankMismatch,
  NonIntegralBalance,
  RankOutOfRange,
  ForbiddenEvenSet,
  BadPolarization,
  GlueNotFound,
  NoValence,
  ValenceNotUnique,
  InconsistentValence,
  DivisionByZeroPoly,
  NonGeneric,
  Inconsistent,
  BadInput,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace k3
