#include "core/error.hpp"

namespace zefav {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return "Io";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Label: return "Label";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::Span: return "Span";
    case ErrorCode::EmptyEntity: return "EmptyEntity";
    case ErrorCode::EmptyCatalog: return "EmptyCatalog";
    case ErrorCode::Backend: return "Backend";
    case ErrorCode::ReplayMiss: return "ReplayMiss";
    case ErrorCode::ResponseMalformed: return "ResponseMalformed";
    case ErrorCode::DuplicateDigest: return "DuplicateDigest";
    case ErrorCode::MissingExamples: return "MissingExamples";
    case ErrorCode::NothingToVerify: return "NothingToVerify";
    case ErrorCode::MismatchedInputs: return "MismatchedInputs";
    case ErrorCode::Alignment: return "Alignment";
    case ErrorCode::DuplicateConfig: return "DuplicateConfig";
    case ErrorCode::Invalid: return "Invalid";
  }
  return "Unknown";
}

}  // namespace zefav
