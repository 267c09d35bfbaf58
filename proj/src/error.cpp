#include "posrep/error.hpp"

namespace posrep {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::UnknownElement: return "UnknownElement";
  }
  return "Error";
}

}  // namespace posrep
