#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace niep {

enum class ErrorCode {
  EmptyInput,
  UnpairedConjugate,
  ImaginaryResidue,
  InvalidArgument,
  WrongDimension,
  DimensionMismatch,
  NotCompanionNonnegative,
  OutsidePi3,
  NotSuleimanova,
  NotBipartite,
  SingularMatrix,
  InvalidCertificate,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace niep
