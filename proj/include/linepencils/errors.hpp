#pragma once

#include <stdexcept>
#include <string>

namespace linepencils {

enum class ErrorCode {
  BadIndex,
  PointTooSmall,
  DuplicatePair,
  SyntaxError,
  ValidationError,
  UnsupportedField,
  RowSumNonZero,
  NotAdmissible,
  EmptyChi,
  QDiagonalZero,
  NotIndecomposable,
  BadSignPattern,
  SearchBoundExceeded,
  NotUnimodular,
  ClassNotPreserved,
  DualityViolation,
  ManifestMismatch,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::PointTooSmall: return "PointTooSmall";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::RowSumNonZero: return "RowSumNonZero";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::EmptyChi: return "EmptyChi";
    case ErrorCode::QDiagonalZero: return "QDiagonalZero";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::BadSignPattern: return "BadSignPattern";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ClassNotPreserved: return "ClassNotPreserved";
    case ErrorCode::DualityViolation: return "DualityViolation";
    case ErrorCode::ManifestMismatch: return "ManifestMismatch";
  }
  return "UnknownError";
}

}  // namespace linepencils
