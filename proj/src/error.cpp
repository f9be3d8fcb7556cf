#include "niep/error.hpp"

namespace niep {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnpairedConjugate: return "UnpairedConjugate";
    case ErrorCode::ImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotCompanionNonnegative: return "NotCompanionNonnegative";
    case ErrorCode::OutsidePi3: return "OutsidePi3";
    case ErrorCode::NotSuleimanova: return "NotSuleimanova";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace niep
