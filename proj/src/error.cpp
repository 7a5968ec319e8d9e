#include "foxcolor/error.hpp"

namespace foxcolor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::LabelArityError: return "LabelArityError";
    case ErrorKind::SignConflict: return "SignConflict";
    case ErrorKind::EmptyCode: return "EmptyCode";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::PremiseViolation: return "PremiseViolation";
    case ErrorKind::GenerationExhausted: return "GenerationExhausted";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Error";
}

}  // namespace foxcolor
